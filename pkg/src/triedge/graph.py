"""Simple graphs on bitset adjacency, and triangular-edge classification."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable, Iterator

from . import _kernels

if TYPE_CHECKING:
    from .family import Triple

Edge = tuple[int, int]


def bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    ``adj[u]`` is the neighbourhood of ``u`` as a bitmask.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError("adjacency must have exactly n rows")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.adj):
            if row & ~full or row >> u & 1:
                raise ValueError(f"row {u} has loops or out-of-range vertices")
            for v in bits(row):
                if not self.adj[v] >> u & 1:
                    raise ValueError(f"adjacency not symmetric at ({u}, {v})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> Graph:
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << u) for u in range(n)))

    @classmethod
    def cycle(cls, n: int) -> Graph:
        return cls.from_edges(n, ((i, (i + 1) % n) for i in range(n)))

    @property
    def e(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[Edge]:
        """Edges ``(u, v)`` with ``u < v``, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, u: int) -> list[int]:
        return list(bits(self.adj[u]))

    def is_independent(self, vertices: Iterable[int]) -> bool:
        mask = 0
        for v in vertices:
            mask |= 1 << v
        return all(not (self.adj[v] & mask) for v in bits(mask))

    def relabel(self, perm: list[int]) -> Graph:
        """Return the graph with vertex ``u`` renamed to ``perm[u]``."""
        adj = [0] * self.n
        for u, row in enumerate(self.adj):
            m = 0
            for v in bits(row):
                m |= 1 << perm[v]
            adj[perm[u]] = m
        return Graph(self.n, tuple(adj))

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Induced subgraph, vertices renumbered in the given order."""
        vs = list(vertices)
        pos = {v: i for i, v in enumerate(vs)}
        adj = []
        for v in vs:
            m = 0
            for w in bits(self.adj[v]):
                if w in pos:
                    m |= 1 << pos[w]
            adj.append(m)
        return Graph(len(vs), tuple(adj))

    def complement(self) -> Graph:
        full = (1 << self.n) - 1
        return Graph(self.n, tuple(full & ~row & ~(1 << u) for u, row in enumerate(self.adj)))


@dataclass(frozen=True)
class EdgeClassification:
    triangular: tuple[Edge, ...]
    non_triangular: tuple[Edge, ...]

    @property
    def e(self) -> int:
        return len(self.triangular) + len(self.non_triangular)

    @property
    def t(self) -> int:
        return len(self.non_triangular)


@dataclass(frozen=True)
class CloneSet:
    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)


def nontriangular_masks(g: Graph) -> list[int]:
    return _kernels.nontriangular_masks(list(g.adj))


def counts(g: Graph) -> tuple[int, int]:
    """``(e(g), t(g))`` without materialising the edge lists."""
    return _kernels.count_nontriangular(list(g.adj))


def classify(g: Graph) -> EdgeClassification:
    """Split the edges of ``g`` by whether their endpoints share a neighbour."""
    nt = nontriangular_masks(g)
    tri: list[Edge] = []
    non: list[Edge] = []
    for u, v in g.edges():
        (non if nt[u] >> v & 1 else tri).append((u, v))
    return EdgeClassification(tuple(tri), tuple(non))


def non_triangular_degree(g: Graph, u: int) -> int:
    if not 0 <= u < g.n:
        raise IndexError(f"vertex {u} out of range for n={g.n}")
    row = g.adj[u]
    return sum(1 for v in bits(row) if not row & g.adj[v])


def triangular_vertices(g: Graph) -> list[int]:
    """Vertices all of whose edges are triangular (isolated vertices included)."""
    return [u for u, m in enumerate(nontriangular_masks(g)) if m == 0]


def clone_partition(g: Graph, s: Iterable[int]) -> list[CloneSet]:
    """Group ``s`` by neighbourhood; largest classes first, ties by smallest member."""
    groups: dict[int, list[int]] = {}
    for v in sorted(set(s)):
        if not 0 <= v < g.n:
            raise IndexError(f"vertex {v} out of range for n={g.n}")
        groups.setdefault(g.adj[v], []).append(v)
    classes = sorted(groups.values(), key=lambda c: (-len(c), c[0]))
    return [CloneSet(tuple(c)) for c in classes]


# -- containment in the extremal family -------------------------------------

_A, _B, _C = 0, 1, 2


def _family_degree_caps(a: int, b: int, c: int) -> list[int]:
    return sorted([a - 1 + b] * a + [a + c] * b + [b] * c, reverse=True)


def family_roles(g: Graph, a: int, b: int, c: int) -> list[int] | None:
    """Assign each vertex a role A/B/C (0/1/2) realising ``g`` inside G(a, b, c).

    B and C must be independent and no edge may join A to C. Returns the role
    list or ``None`` when no such assignment with the exact part sizes exists.
    """
    n = g.n
    if a + b + c != n or min(a, b, c) < 0:
        return None
    degs = g.degrees()
    caps = _family_degree_caps(a, b, c)
    if any(d > cap for d, cap in zip(sorted(degs, reverse=True), caps)):
        return None
    allowed = []
    for d in degs:
        allowed.append([r for r, cap in ((_A, a - 1 + b), (_B, a + c), (_C, b)) if d <= cap])
    # clones are interchangeable: force non-decreasing roles along each class
    prev_clone = [-1] * n
    last: dict[int, int] = {}
    order = sorted(range(n), key=lambda v: (-degs[v], v))
    for v in order:
        prev_clone[v] = last.get(g.adj[v], -1)
        last[g.adj[v]] = v
    role = [-1] * n
    masks = [0, 0, 0]
    left = [a, b, c]

    def place(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        row = g.adj[v]
        lo = role[prev_clone[v]] if prev_clone[v] >= 0 else 0
        for r in allowed[v]:
            if r < lo or not left[r]:
                continue
            if r == _A and row & masks[_C]:
                continue
            if r == _B and row & masks[_B]:
                continue
            if r == _C and row & (masks[_C] | masks[_A]):
                continue
            role[v] = r
            masks[r] |= 1 << v
            left[r] -= 1
            if place(i + 1):
                return True
            masks[r] &= ~(1 << v)
            left[r] += 1
            role[v] = -1
        return False

    return list(role) if place(0) else None


def is_spanning_subgraph_of_family(g: Graph) -> Triple | None:
    """First triple (a ascending, then b) with ``g`` a spanning subgraph of G(a, b, c)."""
    from .family import Triple

    n = g.n
    for a in range(n + 1):
        for b in range(n - a + 1):
            c = n - a - b
            if family_roles(g, a, b, c) is not None:
                return Triple(a, b, c)
    return None


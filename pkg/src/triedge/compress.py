"""Compression: rewrite a graph into a compressed graph with no fewer edges
and no fewer non-triangular edges.

A graph on n vertices is compressed when

1. every independent set is a union of at most 3 log2(n) clone classes, at
   most four of which have more than 3 n^(1/3) vertices, and
2. the triangular vertices U form a clique and share one neighbourhood
   outside U.

All thresholds are compared exactly in integers: ``m <= 3 log2 n`` as
``2**m <= n**3`` and ``s <= 3 n^(1/3)`` as ``s**3 <= 27 n``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .graph import Graph, bits, clone_partition, counts, triangular_vertices
from .weighted import WeightedGraph, weighted_profile

MAX_EXHAUSTIVE_N = 16


def too_many(m: int, n: int) -> bool:
    """m > 3 log2(n)."""
    return 2 ** m > n ** 3


def heavy(w: int, n: int) -> bool:
    """w > 3 n^(1/3)."""
    return w ** 3 > 27 * n


def batch_cap(n: int) -> int:
    """Smallest m with m > 3 log2(n)."""
    m = 0
    while not too_many(m, n):
        m += 1
    return m


def quintuple_sum(n: int) -> int:
    """ceil(3 n^(1/3)), exactly."""
    s = 0
    while s ** 3 < 27 * n:
        s += 1
    return s


# -- certificates -----------------------------------------------------------


@dataclass
class CompressedCertificate:
    clone_partitions: list[list[tuple[int, ...]]] = field(default_factory=list)
    big_clone_counts: list[int] = field(default_factory=list)
    triangular_clique: frozenset[int] = frozenset()
    mode: str = "checked"

    @property
    def sets_examined(self) -> int:
        return len(self.clone_partitions)


def _maximal_independent_sets(g: Graph):
    """Bron-Kerbosch on the complement, pivoting; yields bitmasks."""
    full = (1 << g.n) - 1
    non = [full & ~row & ~(1 << u) for u, row in enumerate(g.adj)]

    def expand(r: int, p: int, x: int):
        if not p and not x:
            yield r
            return
        pivot = max(bits(p | x), key=lambda u: (non[u] & p).bit_count())
        for v in bits(p & ~non[pivot]):
            yield from expand(r | 1 << v, p & non[v], x & non[v])
            p &= ~(1 << v)
            x |= 1 << v

    yield from expand(0, full, 0)


def _greedy_independent(adj: Sequence[int], alive: int, start: int, min_degree: bool) -> int:
    chosen = 1 << start
    cand = alive & ~adj[start] & ~(1 << start)
    while cand:
        if min_degree:
            v = min(bits(cand), key=lambda x: (adj[x] & cand).bit_count())
        else:
            v = (cand & -cand).bit_length() - 1
        chosen |= 1 << v
        cand &= ~adj[v] & ~(1 << v)
    return chosen


def sampled_independent_sets(g: Graph) -> list[int]:
    """Deterministic family of maximal independent sets (as vertex bitmasks).

    Works on the quotient by clone classes, since maximal independent sets are
    unions of whole classes; from every class it runs a lowest-index greedy
    and a minimum-degree greedy.
    """
    classes: dict[int, int] = {}
    for v, row in enumerate(g.adj):
        classes[row] = classes.get(row, 0) | 1 << v
    reps = sorted(classes.values(), key=lambda m: (m & -m))
    k = len(reps)
    qadj = []
    for m in reps:
        row = g.adj[(m & -m).bit_length() - 1]
        qadj.append(sum(1 << j for j, other in enumerate(reps) if row & other))
    alive = (1 << k) - 1
    found: dict[int, None] = {}
    for s in range(k):
        for md in (False, True):
            q = _greedy_independent(qadj, alive, s, md)
            found[sum(reps[j] for j in bits(q))] = None
    return list(found)


def _condition_one(g: Graph, sets: list[int], cert: CompressedCertificate) -> str | None:
    n = g.n
    for mask in sets:
        classes = clone_partition(g, bits(mask))
        big = sum(1 for c in classes if heavy(len(c), n))
        cert.clone_partitions.append([c.vertices for c in classes])
        cert.big_clone_counts.append(big)
        if too_many(len(classes), n):
            return f"independent set {sorted(bits(mask))} splits into {len(classes)} clone classes"
        if big > 4:
            return f"independent set {sorted(bits(mask))} has {big} clone classes above 3n^(1/3)"
    return None


def _condition_two(g: Graph) -> tuple[frozenset[int], str | None]:
    U = triangular_vertices(g)
    umask = sum(1 << u for u in U)
    for u in U:
        if (g.adj[u] | 1 << u) & umask != umask:
            return frozenset(U), f"triangular vertices {U} do not form a clique"
    outside = {g.adj[u] & ~umask for u in U}
    if len(outside) > 1:
        return frozenset(U), "triangular vertices differ outside U"
    return frozenset(U), None


def is_compressed(g: Graph, max_exhaustive_n: int = MAX_EXHAUSTIVE_N) -> tuple[bool, CompressedCertificate | str]:
    """Check both compression conditions.

    Condition 1 runs over every maximal independent set when ``g.n`` is at
    most ``max_exhaustive_n`` and over :func:`sampled_independent_sets`
    otherwise (``certificate.mode`` records which).
    """
    U, bad = _condition_two(g)
    if bad:
        return False, bad
    cert = CompressedCertificate(triangular_clique=U)
    if g.n <= max_exhaustive_n:
        sets = list(_maximal_independent_sets(g))
    else:
        sets = sampled_independent_sets(g)
        cert.mode = "sampled"
    bad = _condition_one(g, sets, cert)
    if bad:
        return False, bad
    return True, cert


def observation_threshold(n: int) -> float:
    return 45 * n ** (1 / 3) * math.log2(n) if n > 1 else 0.0


def large_clone_class_holds(g: Graph, mask: int) -> bool:
    """For an independent set of size >= 45 n^(1/3) log2 n, some clone class has >= |I|/5 members."""
    size = mask.bit_count()
    if size < observation_threshold(g.n):
        return True
    biggest = max(len(c) for c in clone_partition(g, bits(mask)))
    return 5 * biggest >= size


# -- integer-weighted working state ------------------------------------------


class _State:
    """Mutable integer-weighted graph; vertices are compacted on removal."""

    def __init__(self, adj: list[int], weights: list[int], labels: list[int], n_total: int):
        self.adj = adj
        self.w = weights
        self.labels = labels
        self.n_total = n_total

    @classmethod
    def from_weighted(cls, g: WeightedGraph) -> _State:
        ws = [int(w) for w in g.weights]
        if any(w != x for w, x in zip(ws, g.weights)):
            raise ValueError("compression needs integer weights")
        return cls(list(g.graph.adj), ws, list(g.labels), sum(ws))

    def to_weighted(self) -> WeightedGraph:
        return WeightedGraph(Graph(len(self.adj), tuple(self.adj)), tuple(self.w), tuple(self.labels))

    def degree(self, i: int) -> int:
        w = self.w
        return sum(w[j] for j in bits(self.adj[i]))

    def nt_degree(self, i: int) -> int:
        adj, w = self.adj, self.w
        row = adj[i]
        return sum(w[j] for j in bits(row) if not row & adj[j])

    def remove_zeros(self) -> list[int]:
        keep = [i for i, w in enumerate(self.w) if w]
        if len(keep) == len(self.w):
            return []
        gone = [self.labels[i] for i, w in enumerate(self.w) if not w]
        pos = {old: new for new, old in enumerate(keep)}
        adj = []
        for i in keep:
            row = 0
            for j in bits(self.adj[i]):
                if j in pos:
                    row |= 1 << pos[j]
            adj.append(row)
        self.adj = adj
        self.w = [self.w[i] for i in keep]
        self.labels = [self.labels[i] for i in keep]
        return gone

    def find_large_independent(self) -> list[int] | None:
        """Some independent set with more than 3 log2(n) vertices, if greedy finds one."""
        k = len(self.adj)
        n = self.n_total
        if not too_many(k, n):
            return None
        alive = (1 << k) - 1
        order = sorted(range(k), key=lambda i: (self.adj[i].bit_count(), i))
        for s in order:
            for md in (True, False):
                mask = _greedy_independent(self.adj, alive, s, md)
                if too_many(mask.bit_count(), n):
                    return list(bits(mask))
        return None

    def find_heavy_five(self) -> list[int] | None:
        n = self.n_total
        hv = [i for i, w in enumerate(self.w) if heavy(w, n)]
        if len(hv) < 5:
            return None
        for combo in combinations(hv, 5):
            mask = sum(1 << i for i in combo)
            if all(not self.adj[i] & mask for i in combo):
                return list(combo)
        return None


@dataclass(frozen=True)
class MergeStep:
    gain: tuple[int, ...]
    loss: tuple[int, ...]
    w: int

    def __str__(self) -> str:
        return f"merge A={{{','.join(map(str, self.gain))}}} B={{{','.join(map(str, self.loss))}}} w={self.w}"


@dataclass(frozen=True)
class QuintupleStep:
    vertices: tuple[int, ...]
    k: tuple[int, ...]
    l: tuple[int, ...]
    reps: int

    def __str__(self) -> str:
        return (
            f"quint v=({','.join(map(str, self.vertices))}) k=({','.join(map(str, self.k))}) "
            f"l=({','.join(map(str, self.l))}) reps={self.reps}"
        )


def _merge(st: _State, indep: list[int]) -> MergeStep | None:
    idx = indep[: batch_cap(st.n_total)]
    S = [st.degree(i) for i in idx]
    T = [st.nt_degree(i) for i in idx]
    m = len(idx)
    pair = None
    for size in range(1, m // 2 + 1):
        seen: dict[int, tuple[int, ...]] = {}
        for combo in combinations(range(m), size):
            key = sum(S[i] for i in combo)
            other = seen.get(key)
            if other is not None:
                pair = (other, combo)
                break
            seen[key] = combo
        if pair:
            break
    if pair is None:
        return None
    A = [i for i in pair[0] if i not in pair[1]]
    B = [i for i in pair[1] if i not in pair[0]]
    TA = sum(T[i] for i in A)
    TB = sum(T[i] for i in B)
    labA = sorted(st.labels[idx[i]] for i in A)
    labB = sorted(st.labels[idx[i]] for i in B)
    if TA < TB or (TA == TB and labA > labB):
        A, B, labA, labB = B, A, labB, labA
    gain = [idx[i] for i in A]
    loss = [idx[i] for i in B]
    w = min(st.w[i] for i in loss)
    for i in gain:
        st.w[i] += w
    for i in loss:
        st.w[i] -= w
    st.remove_zeros()
    return MergeStep(tuple(labA), tuple(labB), w)


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _quintuple(st: _State, five: list[int]) -> QuintupleStep | None:
    s = quintuple_sum(st.n_total)
    D = [st.degree(i) for i in five]
    T = [st.nt_degree(i) for i in five]
    seen: dict[int, tuple[int, ...]] = {}
    pair = None
    for k in _compositions(s, 5):
        key = sum(a * b for a, b in zip(k, D))
        if key in seen:
            pair = (seen[key], k)
            break
        seen[key] = k
    if pair is None:
        return None
    k, l = pair
    if sum(a * b for a, b in zip(k, T)) < sum(a * b for a, b in zip(l, T)):
        k, l = l, k
    reps = min(st.w[i] // (b - a) for i, a, b in zip(five, k, l) if b > a)
    for i, a, b in zip(five, k, l):
        st.w[i] += reps * (a - b)
    labels = tuple(st.labels[i] for i in five)
    st.remove_zeros()
    return QuintupleStep(labels, k, l, reps)


def _checked(before: WeightedGraph, after: WeightedGraph) -> WeightedGraph:
    p, q = weighted_profile(before), weighted_profile(after)
    if q.total != p.total or q.e != p.e or q.t < p.t:
        raise ArithmeticError(f"weight move broke e/t guarantees: {p} -> {q}")
    return after


def merge_equal_sum_subsets(g: WeightedGraph, indep: Sequence[int]) -> WeightedGraph | None:
    """Shift weight between equal-size, equal-degree-sum subsets of an independent set.

    ``indep`` holds vertex ids. A collision is guaranteed once the set has
    more than 3 log2(n) members; smaller sets are searched all the same.
    Returns ``None`` when no colliding pair exists (caller should skip).
    """
    idx = [g.index(x) for x in indep]
    if not g.graph.is_independent(idx):
        raise ValueError("vertex set is not independent")
    st = _State.from_weighted(g)
    if _merge(st, idx) is None:
        return None
    return _checked(g, st.to_weighted())


def reduce_heavy_quintuple(g: WeightedGraph, five: Sequence[int]) -> WeightedGraph | None:
    """Rebalance five independent heavy vertices until one drops below 3 n^(1/3).

    Returns ``None`` when no two quintuples collide (caller should skip).
    """
    idx = [g.index(x) for x in five]
    if len(set(idx)) != 5 or not g.graph.is_independent(idx):
        raise ValueError("five distinct independent vertices required")
    st = _State.from_weighted(g)
    if not all(heavy(st.w[i], st.n_total) for i in idx):
        raise ValueError("every vertex must weigh more than 3 n^(1/3)")
    if _quintuple(st, idx) is None:
        return None
    return _checked(g, st.to_weighted())


# -- graph-level steps -------------------------------------------------------


def _complete_and_rewire(g: Graph) -> Graph:
    U = triangular_vertices(g)
    if len(U) < 2:
        return g
    umask = sum(1 << u for u in U)
    adj = list(g.adj)
    for u in U:
        adj[u] |= umask & ~(1 << u)
    top = max(U, key=lambda u: (adj[u].bit_count(), -u))
    out = adj[top] & ~umask
    for v in U:
        if v == top:
            continue
        old = adj[v] & ~umask
        for z in bits(old & ~out):
            adj[z] &= ~(1 << v)
        for z in bits(out & ~old):
            adj[z] |= 1 << v
        adj[v] = (adj[v] & umask) | out
    return Graph(g.n, tuple(adj))


def normalize_triangular_clique(g: Graph) -> Graph:
    """Make the triangular vertices a clique with a common outside neighbourhood.

    Missing edges inside U are added, then every member of U copies the outside
    neighbourhood of a maximum-degree member; repeated until U is stable.
    Neither e nor t decreases.
    """
    e0, t0 = counts(g)
    for _ in range(g.n + 1):
        _, bad = _condition_two(g)
        if bad is None:
            break
        g = _complete_and_rewire(g)
    else:
        raise RuntimeError("normalising the triangular vertices did not stabilise")
    e1, t1 = counts(g)
    if e1 < e0 or t1 < t0:
        raise ArithmeticError("normalisation decreased e or t")
    return g


def expand(g: WeightedGraph) -> Graph:
    """Replace each vertex of integer weight w by w clones."""
    start = []
    pos = 0
    for w in g.weights:
        start.append(pos)
        pos += int(w)
    blocks = [((1 << int(w)) - 1) << s for w, s in zip(g.weights, start)]
    adj: list[int] = []
    for i, row in enumerate(g.graph.adj):
        m = 0
        for j in bits(row):
            m |= blocks[j]
        adj.extend([m] * int(g.weights[i]))
    return Graph(pos, tuple(adj))


def lift_clones(g: Graph) -> WeightedGraph:
    """Quotient by clone classes: one vertex per class, weighted by class size."""
    classes: dict[int, list[int]] = {}
    for v, row in enumerate(g.adj):
        classes.setdefault(row, []).append(v)
    groups = sorted(classes.values())
    where = {v: i for i, grp in enumerate(groups) for v in grp}
    adj = []
    for grp in groups:
        m = 0
        for v in bits(g.adj[grp[0]]):
            m |= 1 << where[v]
        adj.append(m)
    return WeightedGraph(Graph(len(groups), tuple(adj)), tuple(len(grp) for grp in groups), tuple(grp[0] for grp in groups))


@dataclass
class CompressionResult:
    graph: Graph
    weighted: WeightedGraph
    steps: list[MergeStep | QuintupleStep]
    rounds: int

    def trace_lines(self) -> list[str]:
        return [str(s) for s in self.steps]


def _reduce(st: _State, steps: list, budget: int) -> None:
    while True:
        if len(steps) > budget:
            raise RuntimeError("compression exceeded its step budget")
        indep = st.find_large_independent()
        if indep is not None:
            step = _merge(st, indep)
            if step is not None:
                steps.append(step)
                continue
        five = st.find_heavy_five()
        if five is not None:
            step = _quintuple(st, five)
            if step is not None:
                steps.append(step)
                continue
        return


def compress_with_trace(g: Graph, max_rounds: int = 8) -> CompressionResult:
    n = g.n
    e0, t0 = counts(g)
    st = _State.from_weighted(WeightedGraph.unit(g))
    steps: list = []
    budget = n * n + 10
    for rounds in range(1, max_rounds + 1):
        _reduce(st, steps, budget)
        weighted = st.to_weighted()
        h = normalize_triangular_clique(expand(weighted))
        ok, _ = is_compressed(h)
        if ok:
            break
        st = _State.from_weighted(lift_clones(h))
    else:
        raise RuntimeError("compression did not reach a compressed graph")
    e1, t1 = counts(h)
    if h.n != n or e1 < e0 or t1 < t0:
        raise ArithmeticError(f"compression lost ground: (e, t) {(e0, t0)} -> {(e1, t1)}")
    return CompressionResult(h, weighted, steps, rounds)


def compress(g: Graph) -> Graph:
    """A compressed graph on the same vertex count with e and t no smaller."""
    return compress_with_trace(g).graph


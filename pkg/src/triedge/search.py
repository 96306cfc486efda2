"""Exhaustive isomorph-free enumeration and small-n verification.

Graphs are generated by canonical augmentation: a graph on k + 1 vertices is
produced from its canonical parent on k vertices by adding one vertex. The
deletion vertex of a graph X is, among the vertices maximising
(degree, sum of neighbour degrees), the one with the smallest canonical
position; a child is accepted iff deleting that vertex gives back the parent
class. Isomorphic children of one parent are merged by certificate, so every
class is visited exactly once.

The tree is cut two levels above the leaves; each subtree is an independent
task and results are merged in task order, so the output does not depend on
the number of workers.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from itertools import combinations
from multiprocessing import get_context
from typing import Callable, Iterator

from . import _kernels
from .family import g_formula
from .formats import code_to_graph6
from .graph import Graph, bits, is_spanning_subgraph_of_family, nontriangular_masks

DEFAULT_MAX_N = 9
MINIMIZER_CAP = 1000


def max_n() -> int:
    """Enumeration limit; ``TRIEDGE_MAX_N`` overrides the default of 9."""
    raw = os.environ.get("TRIEDGE_MAX_N")
    if not raw:
        return DEFAULT_MAX_N
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"TRIEDGE_MAX_N must be an integer, got {raw!r}") from None


def _check_n(n: int) -> None:
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > max_n():
        raise ValueError(f"n={n} exceeds the enumeration limit {max_n()} (set TRIEDGE_MAX_N)")


# -- canonical forms --------------------------------------------------------


def _relabel_rows(adj: list[int] | tuple[int, ...], order: list[int]) -> tuple[int, ...]:
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    out = []
    for v in order:
        m = 0
        for w in bits(adj[v]):
            m |= 1 << pos[w]
        out.append(m)
    return tuple(out)


def canonical_form(g: Graph) -> Graph:
    _, order = _kernels.canonical_label(list(g.adj))
    return Graph(g.n, _relabel_rows(g.adj, order))


def canonical_graph6(g: Graph) -> str:
    code, _ = _kernels.canonical_label(list(g.adj))
    return code_to_graph6(g.n, code)


# -- canonical augmentation --------------------------------------------------


@dataclass(frozen=True)
class _Node:
    adj: tuple[int, ...]
    code: int
    e: int


def _invariants(adj: list[int]) -> list[tuple[int, int]]:
    degs = [r.bit_count() for r in adj]
    return [(degs[v], sum(degs[w] for w in bits(adj[v]))) for v in range(len(adj))]


def _children(node: _Node, n_final: int, e_lo: int, e_hi: int) -> list[_Node]:
    adj = node.adj
    k = len(adj)
    degs = [r.bit_count() for r in adj]
    maxdeg = max(degs, default=0)
    future = sum(range(k + 1, n_final))
    lo = max(maxdeg, e_lo - node.e - future, 0)
    hi = min(k, e_hi - node.e)
    out: list[_Node] = []
    seen: set[int] = set()
    new_bit = 1 << k
    for size in range(lo, hi + 1):
        eligible = [i for i in range(k) if degs[i] < size]
        for S in combinations(eligible, size):
            smask = 0
            child = list(adj)
            for i in S:
                smask |= 1 << i
                child[i] |= new_bit
            child.append(smask)
            inv = _invariants(child)
            top = max(inv)
            if inv[k] != top:
                continue
            ties = [v for v in range(k + 1) if inv[v] == top]
            code, order = _kernels.canonical_label(child)
            if code in seen:
                continue
            if len(ties) > 1:
                pos = {v: i for i, v in enumerate(order)}
                star = min(ties, key=pos.__getitem__)
                if star != k:
                    keep = [v for v in range(k + 1) if v != star]
                    if _kernels.canonical_label(_induced_rows(child, keep))[0] != node.code:
                        continue
            seen.add(code)
            out.append(_Node(_relabel_rows(child, order), code, node.e + size))
    return out


def _induced_rows(adj: list[int], keep: list[int]) -> list[int]:
    pos = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        m = 0
        for w in bits(adj[v]):
            if w in pos:
                m |= 1 << pos[w]
        rows.append(m)
    return rows


_ROOT = _Node((0,), 0, 0)


def _walk(node: _Node, n: int, e_lo: int, e_hi: int) -> Iterator[_Node]:
    """Depth-first over the subtree below ``node``, yielding graphs on n vertices."""
    if len(node.adj) == n:
        if e_lo <= node.e <= e_hi:
            yield node
        return
    for child in _children(node, n, e_lo, e_hi):
        yield from _walk(child, n, e_lo, e_hi)


def _edge_bounds(n: int, e_lo: int | None, e_hi: int | None) -> tuple[int, int]:
    top = n * (n - 1) // 2
    return (0 if e_lo is None else e_lo), (top if e_hi is None else e_hi)


def _tasks(n: int, e_lo: int, e_hi: int) -> list[_Node]:
    """Subtree roots two levels above the leaves, in depth-first order."""
    split = max(1, n - 2)
    frontier = [_ROOT]
    for _ in range(split - 1):
        frontier = [c for node in frontier for c in _children(node, n, e_lo, e_hi)]
    return frontier


def iter_graphs(n: int, e_lo: int | None = None, e_hi: int | None = None) -> Iterator[Graph]:
    """Canonical representatives of all n-vertex classes with e_lo <= e <= e_hi."""
    _check_n(n)
    lo, hi = _edge_bounds(n, e_lo, e_hi)
    if n == 0:
        if lo <= 0 <= hi:
            yield Graph(0, ())
        return
    for task in _tasks(n, lo, hi):
        for node in _walk(task, n, lo, hi):
            yield Graph(n, node.adj)


def enumerate_graphs(n: int, e: int | None, visitor: Callable[[Graph], object]) -> int:
    """Call ``visitor`` once per isomorphism class of n-vertex graphs with e edges.

    ``e=None`` visits every edge count. Returns the number of classes.
    """
    if e is not None and not 0 <= e <= n * (n - 1) // 2:
        raise ValueError(f"e={e} outside [0, {n * (n - 1) // 2}]")
    count = 0
    for g in iter_graphs(n, e, e):
        visitor(g)
        count += 1
    return count


# -- per-edge-count summaries --------------------------------------------------


@dataclass
class _Bucket:
    """Graphs with the most non-triangular edges at one edge count."""

    classes: int = 0
    best_t: int = -1
    count: int = 0
    graphs: list[str] = field(default_factory=list)
    overflow: bool = False
    in_family: bool = True

    def merge(self, other: _Bucket) -> None:
        self.classes += other.classes
        if other.best_t > self.best_t:
            self.best_t, self.count = other.best_t, other.count
            self.graphs, self.overflow, self.in_family = list(other.graphs), other.overflow, other.in_family
        elif other.best_t == self.best_t and other.count:
            self.count += other.count
            self.in_family = self.in_family and other.in_family
            room = MINIMIZER_CAP - len(self.graphs)
            self.graphs.extend(other.graphs[:room])
            self.overflow = self.overflow or other.overflow or len(other.graphs) > room


def _scan(args: tuple[int, _Node, int, int, int]) -> dict[int, _Bucket]:
    n, task, e_lo, e_hi, family_from = args
    out: dict[int, _Bucket] = {}
    for node in _walk(task, n, e_lo, e_hi):
        _, t = _kernels.count_nontriangular(list(node.adj))
        b = out.get(node.e)
        if b is None:
            b = out[node.e] = _Bucket()
        b.classes += 1
        if t < b.best_t:
            continue
        if t > b.best_t:
            b.best_t, b.count, b.graphs, b.overflow, b.in_family = t, 0, [], False, True
        b.count += 1
        if len(b.graphs) < MINIMIZER_CAP:
            b.graphs.append(code_to_graph6(n, node.code))
        else:
            b.overflow = True
        if node.e >= family_from and b.in_family:
            b.in_family = is_spanning_subgraph_of_family(Graph(n, node.adj)) is not None
    return out


def default_jobs() -> int:
    try:
        return len(os.sched_getaffinity(0))
    except AttributeError:
        return os.cpu_count() or 1


def _summarise(n: int, e_lo: int, e_hi: int, jobs: int, family_from: int) -> dict[int, _Bucket]:
    _check_n(n)
    if n == 0:
        return {0: _Bucket(1, 0, 1, [code_to_graph6(0, 0)])} if e_lo <= 0 <= e_hi else {}
    args = [(n, task, e_lo, e_hi, family_from) for task in _tasks(n, e_lo, e_hi)]
    if jobs <= 1 or len(args) <= 1:
        parts = map(_scan, args)
        return _merge_parts(parts)
    with get_context("fork").Pool(jobs) as pool:
        return _merge_parts(pool.imap(_scan, args, chunksize=max(1, len(args) // (8 * jobs))))


def _merge_parts(parts) -> dict[int, _Bucket]:
    total: dict[int, _Bucket] = {}
    for part in parts:
        for e, b in part.items():
            if e in total:
                total[e].merge(b)
            else:
                total[e] = b
    for b in total.values():
        b.graphs.sort()
    return total


def count_classes(n: int, jobs: int = 1) -> dict[int, int]:
    """Number of isomorphism classes of n-vertex graphs per edge count."""
    lo, hi = _edge_bounds(n, None, None)
    buckets = _summarise(n, lo, hi, jobs, family_from=hi + 1)
    return {e: buckets[e].classes for e in sorted(buckets)}


# -- verification -------------------------------------------------------------


@dataclass(frozen=True)
class VerificationReport:
    """Brute-force minimum of triangular edges against g(n, e).

    ``all_minimizers_in_family`` tests spanning containment: each minimiser
    must be a subgraph of some G(a, b, c) on the same n vertices.
    """

    n: int
    e: int
    brute_min: int
    formula_value: int
    minimizers: tuple[str, ...]
    num_minimizers: int
    all_minimizers_in_family: bool
    overflow: bool = False

    @property
    def match(self) -> bool:
        return self.brute_min == self.formula_value

    def csv_row(self) -> str:
        flag = lambda x: "true" if x else "false"  # noqa: E731
        return (
            f"{self.n},{self.e},{self.brute_min},{self.formula_value},{flag(self.match)},"
            f"{self.num_minimizers},{flag(self.all_minimizers_in_family)}"
        )


REPORT_HEADER = "n,e,brute_min,formula_g,match,num_minimizers,all_in_family"


def _report(n: int, e: int, b: _Bucket) -> VerificationReport:
    return VerificationReport(
        n=n,
        e=e,
        brute_min=e - b.best_t,
        formula_value=g_formula(n, e).value,
        minimizers=tuple(b.graphs),
        num_minimizers=b.count,
        all_minimizers_in_family=b.in_family,
        overflow=b.overflow,
    )


def _verify_bounds(n: int, e: int) -> None:
    if not n * n // 4 < e <= n * (n - 1) // 2:
        raise ValueError(f"e={e} outside (floor(n^2/4), C(n,2)] for n={n}")


def brute_min_triangular(n: int, e: int, jobs: int = 1) -> VerificationReport:
    _verify_bounds(n, e)
    buckets = _summarise(n, e, e, jobs, family_from=e)
    return _report(n, e, buckets[e])


def verify_range(n: int, jobs: int = 1) -> list[VerificationReport]:
    """Reports for every e with floor(n^2/4) < e <= C(n,2), from one enumeration pass."""
    lo, hi = n * n // 4 + 1, n * (n - 1) // 2
    if lo > hi:
        _check_n(n)
        return []
    buckets = _summarise(n, lo, hi, jobs, family_from=lo)
    return [_report(n, e, buckets[e]) for e in range(lo, hi + 1)]


# -- Pareto frontier ----------------------------------------------------------


@dataclass(frozen=True)
class ParetoPoint:
    e: int
    t: int
    witness: str


def pareto_frontier(n: int, jobs: int = 1) -> list[ParetoPoint]:
    """Non-dominated (e, t) pairs over all n-vertex graphs, by increasing e.

    The witness is the smallest canonical graph6 string attaining the point.
    """
    lo, hi = _edge_bounds(n, None, None)
    buckets = _summarise(n, lo, hi, jobs, family_from=hi + 1)
    points: list[ParetoPoint] = []
    best_after = -1
    for e in sorted(buckets, reverse=True):
        b = buckets[e]
        if b.best_t > best_after:
            points.append(ParetoPoint(e, b.best_t, b.graphs[0]))
            best_after = b.best_t
    return points[::-1]


def check_local_optimality(g: Graph) -> bool:
    """Every ordered pair u, v has deg(u) >= deg(v) - 1 or ntdeg(u) >= ntdeg(v) - 1."""
    deg = g.degrees()
    ntd = [m.bit_count() for m in nontriangular_masks(g)]
    for u in range(g.n):
        for v in range(g.n):
            if deg[u] < deg[v] - 1 and ntd[u] < ntd[v] - 1:
                return False
    return True

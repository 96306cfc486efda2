"""Slow, independent reference implementations used to check the package.

Nothing here imports the package's kernels; graphs are plain adjacency
matrices or edge sets.
"""

from __future__ import annotations

from itertools import combinations, permutations

import numpy as np


def naive_counts(n: int, edges) -> tuple[int, int]:
    """(e, t) by scanning every third vertex for every edge."""
    mat = [[False] * n for _ in range(n)]
    for u, v in edges:
        mat[u][v] = mat[v][u] = True
    e = t = 0
    for u in range(n):
        for v in range(u + 1, n):
            if not mat[u][v]:
                continue
            e += 1
            if not any(mat[u][w] and mat[v][w] for w in range(n)):
                t += 1
    return e, t


def family_edges(a: int, b: int, c: int) -> set[tuple[int, int]]:
    """Edge set of G(a, b, c) written out from its definition."""
    A = range(a)
    B = range(a, a + b)
    C = range(a + b, a + b + c)
    out = {(u, v) for u, v in combinations(A, 2)}
    out |= {(min(u, v), max(u, v)) for u in B for v in list(A) + list(C)}
    return out


def _pair_index(n: int) -> dict[tuple[int, int], int]:
    return {p: i for i, p in enumerate(combinations(range(n), 2))}


def all_labelled(n: int) -> tuple[np.ndarray, list[tuple[int, int]]]:
    """Every labelled graph on n vertices as rows of edge indicator bits."""
    pairs = list(combinations(range(n), 2))
    m = len(pairs)
    codes = np.arange(1 << m, dtype=np.int64)
    bits = ((codes[:, None] >> np.arange(m)) & 1).astype(np.int64)
    return bits, pairs


def brute_canonical_codes(n: int) -> np.ndarray:
    """For every labelled graph, the minimum edge-bit code over all relabelings."""
    bits, pairs = all_labelled(n)
    index = _pair_index(n)
    weights = (1 << np.arange(len(pairs), dtype=np.int64))
    best = np.full(len(bits), np.iinfo(np.int64).max, dtype=np.int64)
    for perm in permutations(range(n)):
        target = [index[tuple(sorted((perm[u], perm[v])))] for u, v in pairs]
        np.minimum(best, bits @ weights[target], out=best)
    return best


def brute_class_counts(n: int) -> dict[int, int]:
    """Isomorphism classes per edge count, by orbit minima over all permutations."""
    if n <= 1:
        return {0: 1}
    best = brute_canonical_codes(n)
    reps = np.unique(best)
    m = n * (n - 1) // 2
    edge_counts = ((reps[:, None] >> np.arange(m)) & 1).sum(axis=1)
    values, counts = np.unique(edge_counts, return_counts=True)
    return {int(v): int(c) for v, c in zip(values, counts)}


def brute_profiles(n: int) -> tuple[np.ndarray, np.ndarray]:
    """(e, t) of every labelled graph on n vertices via matrix products."""
    bits, pairs = all_labelled(n)
    adj = np.zeros((len(bits), n, n), dtype=np.int64)
    for k, (u, v) in enumerate(pairs):
        adj[:, u, v] = bits[:, k]
        adj[:, v, u] = bits[:, k]
    common = adj @ adj
    lonely = (adj == 1) & (common == 0)
    e = bits.sum(axis=1)
    t = lonely.sum(axis=(1, 2)) // 2
    return e, t


def brute_min_triangular(n: int) -> dict[int, int]:
    """Fewest triangular edges for each edge count, over all labelled graphs."""
    e, t = brute_profiles(n)
    out: dict[int, int] = {}
    for ee, tt in zip(e.tolist(), t.tolist()):
        tri = ee - tt
        if ee not in out or tri < out[ee]:
            out[ee] = tri
    return out


def brute_frontier(n: int) -> list[tuple[int, int]]:
    e, t = brute_profiles(n)
    pts = set(zip(e.tolist(), t.tolist()))
    return sorted(
        p for p in pts
        if not any(q != p and q[0] >= p[0] and q[1] >= p[1] for q in pts)
    )


def contains(host_edges: set[tuple[int, int]], n: int, edges) -> bool:
    """Whether some relabeling of ``edges`` fits inside ``host_edges`` (tiny n only)."""
    for perm in permutations(range(n)):
        if all(tuple(sorted((perm[u], perm[v]))) in host_edges for u, v in edges):
            return True
    return False


def naive_weighted_profile(n: int, edges, weights) -> tuple:
    """(e, t) of a vertex-weighted graph: weight products over (non-triangular) edges."""
    es = {tuple(sorted(p)) for p in edges}
    e = t = 0
    for u, v in es:
        prod = weights[u] * weights[v]
        e += prod
        if not any((min(u, w), max(u, w)) in es and (min(v, w), max(v, w)) in es for w in range(n)):
            t += prod
    return e, t

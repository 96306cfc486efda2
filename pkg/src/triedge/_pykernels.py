"""Pure-Python reference kernels.

Graphs are passed as a list of neighbour bitmasks: bit ``v`` of ``adj[u]``
is set iff ``uv`` is an edge. The compiled module ``_ckernels`` exposes the
same functions with identical results; this module is the fallback and the
oracle it is tested against.
"""

from __future__ import annotations

BACKEND = "python"


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def nontriangular_masks(adj: list[int]) -> list[int]:
    """For every vertex u, the mask of neighbours v with uv in no triangle."""
    out = [0] * len(adj)
    for u, row in enumerate(adj):
        m = 0
        for v in _bits(row):
            if not (row & adj[v]):
                m |= 1 << v
        out[u] = m
    return out


def count_nontriangular(adj: list[int]) -> tuple[int, int]:
    """Return ``(e, t)``: number of edges and of non-triangular edges."""
    e2 = 0
    t2 = 0
    for row in adj:
        e2 += row.bit_count()
        for v in _bits(row):
            if not (row & adj[v]):
                t2 += 1
    return e2 // 2, t2 // 2


# -- canonical labelling ----------------------------------------------------
#
# Individualisation-refinement search. Colour refinement ranks each vertex by
# (colour, neighbour counts per colour); the target cell is the first
# non-singleton cell; the leaf certificate is the graph6 bit string of the
# relabelled graph read as an integer, and the canonical form is the maximum
# certificate. Twins inside the target cell generate identical subtrees and
# only the first of each twin class is expanded.


def _refine(adj: list[int], colors: list[int], k: int) -> tuple[list[int], int]:
    n = len(adj)
    while True:
        cells = [0] * k
        for v in range(n):
            cells[colors[v]] |= 1 << v
        sigs = []
        for v in range(n):
            row = adj[v]
            sigs.append((colors[v],) + tuple((row & c).bit_count() for c in cells))
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        if len(ranks) == k:
            return colors, k
        colors = [ranks[s] for s in sigs]
        k = len(ranks)


def _certificate(adj: list[int], order: list[int]) -> int:
    code = 0
    for j in range(1, len(order)):
        row = adj[order[j]]
        for i in range(j):
            code = (code << 1) | ((row >> order[i]) & 1)
    return code


def canonical_label(adj: list[int]) -> tuple[int, list[int]]:
    """Return ``(code, order)``.

    ``order[i]`` is the vertex placed at canonical position ``i``; ``code`` is
    the canonical certificate, equal for two graphs iff they are isomorphic.
    """
    n = len(adj)
    if n == 0:
        return 0, []
    colors, k = _refine(adj, [0] * n, 1)
    best_code = -1
    best_order: list[int] = []
    stack = [(colors, k)]
    while stack:
        colors, k = stack.pop()
        if k == n:
            order = [0] * n
            for v in range(n):
                order[colors[v]] = v
            code = _certificate(adj, order)
            if code > best_code:
                best_code, best_order = code, order
            continue
        sizes = [0] * k
        for c in colors:
            sizes[c] += 1
        target = next(c for c in range(k) if sizes[c] > 1)
        cell = [v for v in range(n) if colors[v] == target]
        kept: list[int] = []
        for v in cell:
            if any((adj[v] & ~(1 << w)) == (adj[w] & ~(1 << v)) for w in kept):
                continue
            kept.append(v)
        children = []
        for v in kept:
            nc = [c + 1 if c > target else c for c in colors]
            for w in cell:
                if w != v:
                    nc[w] = target + 1
            children.append(_refine(adj, nc, k + 1))
        stack.extend(reversed(children))
    return best_code, best_order

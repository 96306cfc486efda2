"""Weighted graphs with exact rational weights, and the weight-shifting moves.

A weighted graph carries a positive weight per vertex; e(G) sums w(u)w(v)
over edges and t(G) sums it over non-triangular edges. Vertices keep their
original ids (``labels``) through removals so traces stay readable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

from .family import Triple
from .formats import format_rational
from .graph import Graph, bits, nontriangular_masks

Weight = Rational  # int or Fraction


@dataclass(frozen=True)
class WeightedGraph:
    graph: Graph
    weights: tuple[Weight, ...]
    labels: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if not self.labels:
            object.__setattr__(self, "labels", tuple(range(self.graph.n)))
        if len(self.weights) != self.graph.n or len(self.labels) != self.graph.n:
            raise ValueError("one weight and one label per vertex required")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("vertex labels must be distinct")
        if any(w <= 0 for w in self.weights):
            raise ValueError("weights must be positive; drop zero-weight vertices")
        if sum(self.weights) < self.graph.n:
            raise ValueError("total weight is below the number of vertices")

    @classmethod
    def unit(cls, g: Graph) -> WeightedGraph:
        return cls(g, (1,) * g.n)

    @classmethod
    def pruned(cls, g: Graph, weights: Sequence[Weight], labels: Sequence[int]) -> WeightedGraph:
        """Build from possibly zero weights, removing zero-weight vertices."""
        keep = [i for i, w in enumerate(weights) if w != 0]
        if any(w < 0 for w in weights):
            raise ValueError("negative weight")
        sub = g if len(keep) == g.n else g.induced(keep)
        return cls(sub, tuple(weights[i] for i in keep), tuple(labels[i] for i in keep))

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def total(self) -> Weight:
        return sum(self.weights)

    def index(self, label: int) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"no vertex with id {label}") from None

    def weight(self, label: int) -> Weight:
        return self.weights[self.index(label)]

    def degree(self, i: int) -> Weight:
        """Weighted degree of the vertex at index ``i``."""
        return sum((self.weights[j] for j in bits(self.graph.adj[i])), 0)

    def degree_vectors(self) -> tuple[list[Weight], list[Weight]]:
        """Weighted degree and weighted non-triangular degree of every vertex."""
        nt = nontriangular_masks(self.graph)
        w = self.weights
        deg = [sum((w[j] for j in bits(row)), 0) for row in self.graph.adj]
        ntd = [sum((w[j] for j in bits(m)), 0) for m in nt]
        return deg, ntd


@dataclass(frozen=True)
class WeightedProfile:
    e: Weight
    t: Weight
    total: Weight


def weighted_profile(g: WeightedGraph) -> WeightedProfile:
    nt = nontriangular_masks(g.graph)
    w = g.weights
    e = 0
    t = 0
    for u, row in enumerate(g.graph.adj):
        upper = row >> (u + 1) << (u + 1)
        for v in bits(upper):
            p = w[u] * w[v]
            e += p
            if nt[u] >> v & 1:
                t += p
    return WeightedProfile(e, t, g.total)


# -- good weighted graphs ---------------------------------------------------


@dataclass(frozen=True)
class GoodDecomposition:
    """Clique ``clique`` plus the unique non-triangular edge ``u``-``v`` (vertex ids)."""

    clique: frozenset[int]
    u: int
    v: int


def check_good(g: WeightedGraph) -> GoodDecomposition | None:
    """Return the decomposition if uv is the only non-triangular edge and the rest is a clique.

    ``u`` is the endpoint with more clique weight in its neighbourhood (ties:
    larger weight, then smaller id), i.e. the endpoint playing the role of B
    in G(a, b, c).
    """
    adj = g.graph.adj
    nt = nontriangular_masks(g.graph)
    pairs = [(i, j) for i, m in enumerate(nt) for j in bits(m) if i < j]
    if len(pairs) != 1:
        return None
    i, j = pairs[0]
    rest = [k for k in range(g.n) if k not in (i, j)]
    mask = sum(1 << k for k in rest)
    if any((adj[k] | (1 << k)) & mask != mask for k in rest):
        return None
    def key(k: int):
        into_clique = sum((g.weights[x] for x in bits(adj[k] & mask)), Fraction(0))
        return into_clique, g.weights[k], -g.labels[k]


    u, v = (i, j) if key(i) >= key(j) else (j, i)
    return GoodDecomposition(frozenset(g.labels[k] for k in rest), g.labels[u], g.labels[v])


def _good_parts(g: WeightedGraph) -> tuple[GoodDecomposition, list[int], int, int]:
    dec = check_good(g)
    if dec is None:
        raise ValueError("weighted graph is not good")
    clique = sorted(g.index(x) for x in dec.clique)
    return dec, clique, g.index(dec.u), g.index(dec.v)


# -- triple elimination -----------------------------------------------------


@dataclass(frozen=True)
class ShiftVector:
    s1: Fraction
    s2: Fraction
    s3: Fraction

    def __iter__(self):
        return iter((self.s1, self.s2, self.s3))

    def __str__(self) -> str:
        return "(" + ",".join(format_rational(x) for x in self) + ")"


def _primitive(vec: Sequence[Fraction]) -> list[Fraction]:
    den = math.lcm(*(Fraction(x).denominator for x in vec))
    ints = [int(Fraction(x) * den) for x in vec]
    g = math.gcd(*ints)
    return [Fraction(x // g) for x in ints]


def _dot(a: Sequence, b: Sequence):
    return sum(x * y for x, y in zip(a, b))


def shift_vector(d: Sequence[Weight], t: Sequence[Weight]) -> ShiftVector:
    """Zero-sum ``s`` with ``s.d >= 0`` and ``s.t >= 0``, not all zero.

    Takes the direction of the line ``s.t = 0`` inside the zero-sum plane and
    orients it so ``s.d >= 0``; when ``t`` is constant the same is done with
    ``d``. Free orientations pick a positive first entry; when both vectors
    are constant the result is (1, 0, -1).
    """
    d = [Fraction(x) for x in d]
    t = [Fraction(x) for x in t]
    for vec, other in ((t, d), (d, t)):
        s = [vec[2] - vec[1], vec[0] - vec[2], vec[1] - vec[0]]
        if any(s):
            s = _primitive(s)
            lead = next(x for x in s if x)
            if _dot(s, other) < 0 or (_dot(s, other) == 0 and lead < 0):
                s = [-x for x in s]
            return ShiftVector(*s)
    return ShiftVector(Fraction(1), Fraction(0), Fraction(-1))


def _check_independent_triple(g: WeightedGraph, triple: Sequence[int]) -> list[int]:
    if len(set(triple)) != 3:
        raise ValueError("a triple of three distinct vertices is required")
    idx = [g.index(x) for x in triple]
    if not g.graph.is_independent(idx):
        raise ValueError(f"vertices {tuple(triple)} are not independent")
    return idx


def find_shift(g: WeightedGraph, triple: Sequence[int]) -> ShiftVector:
    idx = _check_independent_triple(g, triple)
    deg, ntd = g.degree_vectors()
    return shift_vector([deg[i] for i in idx], [ntd[i] for i in idx])


@dataclass(frozen=True)
class EliminationStep:
    triple: tuple[int, int, int]
    shift: ShiftVector
    lam: Fraction
    removed: tuple[int, ...]
    e: Weight
    t: Weight

    def __str__(self) -> str:
        i, j, k = self.triple
        removed = ",".join(map(str, self.removed))
        return (
            f"triple=({i},{j},{k}) s={self.shift} lambda={format_rational(self.lam)} "
            f"removed={removed} e={format_rational(self.e)} t={format_rational(self.t)}"
        )


def _eliminate(g: WeightedGraph, triple: Sequence[int]) -> tuple[WeightedGraph, EliminationStep]:
    idx = _check_independent_triple(g, triple)
    s = find_shift(g, triple)
    lam = min(g.weights[i] / -si for i, si in zip(idx, s) if si < 0)
    weights = list(g.weights)
    for i, si in zip(idx, s):
        weights[i] += lam * si
    before = weighted_profile(g)
    out = WeightedGraph.pruned(g.graph, weights, g.labels)
    after = weighted_profile(out)
    if after.total != before.total or after.e < before.e or after.t < before.t:
        raise ArithmeticError(f"triple elimination lost ground: {before} -> {after}")
    removed = tuple(g.labels[i] for i in idx if weights[i] == 0)
    step = EliminationStep(tuple(triple), s, Fraction(lam), removed, after.e, after.t)  # type: ignore[arg-type]
    return out, step


def eliminate_triple(g: WeightedGraph, triple: Sequence[int]) -> WeightedGraph:
    """Shift weight along the triple until one vertex empties, then drop it."""
    return _eliminate(g, triple)[0]


def first_independent_triple(g: Graph) -> tuple[int, int, int] | None:
    n = g.n
    full = (1 << n) - 1
    for i in range(n):
        ci = full & ~g.adj[i] & ~((1 << (i + 1)) - 1)
        for j in bits(ci):
            cj = ci & ~g.adj[j] & ~((1 << (j + 1)) - 1)
            if cj:
                return i, j, (cj & -cj).bit_length() - 1
    return None


@dataclass
class ReductionTrace:
    steps: list[EliminationStep] = field(default_factory=list)
    good: GoodDecomposition | None = None

    def lines(self) -> list[str]:
        out = [str(s) for s in self.steps]
        if self.good is None:
            out.append("good=no")
        else:
            clique = ",".join(map(str, sorted(self.good.clique)))
            out.append(f"good=yes K={{{clique}}} u={self.good.u} v={self.good.v}")
        return out


def reduce_to_triple_free(g: WeightedGraph) -> tuple[WeightedGraph, ReductionTrace]:
    """Eliminate lexicographically first independent triples until none is left."""
    trace = ReductionTrace()
    limit = max(g.n - 2, 0)
    while (found := first_independent_triple(g.graph)) is not None:
        if len(trace.steps) >= limit:
            raise RuntimeError("triple elimination did not terminate within n - 2 steps")
        g, step = _eliminate(g, [g.labels[i] for i in found])
        trace.steps.append(step)
    trace.good = check_good(g)
    return g, trace


# -- rounding to the family -------------------------------------------------


def round_to_family(g: WeightedGraph) -> Triple:
    """Round a good weighted graph of integral total weight n to some G(a, b, c).

    Requires t(g) > 5n. The output satisfies a + b + c = n,
    C(a, 2) + (n - b) b >= alpha^2 / 2 + (n - beta) beta and bc >= beta gamma - 5n.
    """
    dec, clique, iu, iv = _good_parts(g)
    total = Fraction(g.total)
    if total.denominator != 1:
        raise ValueError("total weight must be an integer")
    n = int(total)
    t = weighted_profile(g).t
    if t <= 5 * n:
        raise ValueError(f"t(G) = {t} does not exceed 5n = {5 * n}")
    alpha = Fraction(sum((g.weights[k] for k in clique), 0))
    beta, gamma = sorted((Fraction(g.weights[iu]), Fraction(g.weights[iv])), reverse=True)
    a = math.ceil(alpha) + 2
    b = math.floor(beta) if 2 * beta >= n else math.ceil(beta)
    c = n - a - b
    if c < 0:
        raise ArithmeticError("rounding produced a negative part")
    if Fraction(a * (a - 1), 2) + (n - b) * b < alpha * alpha / 2 + (n - beta) * beta:
        raise ArithmeticError("rounded triple misses the edge inequality")
    if b * c < beta * gamma - 5 * n:
        raise ArithmeticError("rounded triple misses the non-triangular inequality")
    return Triple(a, b, c)


# -- exchange moves ---------------------------------------------------------


def _replace(g: WeightedGraph, changes: dict[int, Weight]) -> WeightedGraph:
    weights = list(g.weights)
    for i, w in changes.items():
        weights[i] = w
    return WeightedGraph.pruned(g.graph, weights, g.labels)


def exchange_edges_for_t(g: WeightedGraph, x: Weight) -> WeightedGraph:
    """Move weight x/n from the clique to u: t becomes (beta + x/n) gamma, e drops by at most x."""
    x = Fraction(x)
    if x < 0:
        raise ValueError("x must be non-negative")
    dec, clique, iu, iv = _good_parts(g)
    n = Fraction(g.total)
    alpha = Fraction(sum((g.weights[k] for k in clique), 0))
    if alpha < 2 * x / n:
        raise ValueError(f"clique weight {alpha} is below 2x/n = {2 * x / n}")
    if x == 0:
        return g
    step = x / n
    ratio = (alpha - step) / alpha
    changes: dict[int, Weight] = {k: g.weights[k] * ratio for k in clique}
    changes[iu] = g.weights[iu] + step
    out = _replace(g, changes)
    before, after = weighted_profile(g), weighted_profile(out)
    beta, gamma = g.weights[iu], g.weights[iv]
    if after.e < before.e - x or after.t != (beta + step) * gamma:
        raise ArithmeticError("edges-for-t exchange broke its guarantees")
    return out


def exchange_t_for_edges(g: WeightedGraph, x: Weight) -> WeightedGraph:
    """Move weight x/2n from v to the lightest clique vertex w.

    t becomes beta (gamma - x/2n); e grows by at least (x/2n)(alpha/2) when u is
    adjacent to the whole clique and v only to u, the shape of G(a, b, c).
    Other good graphs can lose edges under this move and are rejected.
    """
    x = Fraction(x)
    if x < 0:
        raise ValueError("x must be non-negative")
    dec, clique, iu, iv = _good_parts(g)
    if len(clique) < 2:
        raise ValueError("the clique must contain at least two vertices")
    n = Fraction(g.total)
    beta, gamma = g.weights[iu], g.weights[iv]
    if gamma < x / n:
        raise ValueError(f"weight of v ({gamma}) is below x/n = {x / n}")
    if x == 0:
        return g
    alpha = Fraction(sum((g.weights[k] for k in clique), 0))
    step = x / (2 * n)
    w = min(clique, key=lambda k: (g.weights[k], g.labels[k]))
    out = _replace(g, {iv: gamma - step, w: g.weights[w] + step})
    before, after = weighted_profile(g), weighted_profile(out)
    if after.t != beta * (gamma - step):
        raise ArithmeticError("t-for-edges exchange broke its t guarantee")
    if after.e < before.e + step * alpha / 2:
        raise ValueError(
            "edge gain below (x/2n)(alpha/2): u must be complete to the clique and v adjacent only to u"
        )
    return out


def good_graph(
    clique_weights: Iterable[Weight],
    beta: Weight,
    gamma: Weight,
    u_neighbors: Iterable[int] | None = None,
    v_neighbors: Iterable[int] = (),
) -> WeightedGraph:
    """Weighted graph on a clique (ids 0..k-1), u = k and v = k + 1, with uv an edge.

    ``u_neighbors`` / ``v_neighbors`` list clique positions joined to u / v
    (defaults: u complete to the clique, v adjacent only to u). The result is
    good only when the neighbourhoods are disjoint and every edge other than
    uv lies in a triangle; :func:`check_good` decides.
    """
    cw = list(clique_weights)
    k = len(cw)
    u, v = k, k + 1
    nu = set(range(k)) if u_neighbors is None else set(u_neighbors)
    edges = [(i, j) for i in range(k) for j in range(i + 1, k)] + [(u, v)]
    edges += [(i, u) for i in sorted(nu)] + [(i, v) for i in sorted(set(v_neighbors))]
    return WeightedGraph(Graph.from_edges(k + 2, edges), tuple(cw) + (beta, gamma))

"""The extremal family G(a, b, c) and the bounds g(n, e), t(n, e).

G(a, b, c) has a clique A of size a and independent sets B, C of sizes b, c;
B is complete to A and C, and there are no A-C edges. Vertices are laid out
A first, then B, then C.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Literal, NamedTuple

from .graph import Graph


class Triple(NamedTuple):
    a: int
    b: int
    c: int

    @property
    def n(self) -> int:
        return self.a + self.b + self.c

    def __str__(self) -> str:
        return f"{self.a},{self.b},{self.c}"

    @classmethod
    def parse(cls, text: str) -> Triple:
        a, b, c = (int(x) for x in text.strip().strip("()").split(","))
        return cls(a, b, c)


@dataclass(frozen=True)
class FamilyProfile:
    edges: int
    non_triangular: int


@dataclass(frozen=True)
class FormulaResult:
    value: int
    argmins: tuple[Triple, ...]
    kind: Literal["g", "t"]

    def csv_row(self, n: int, e: int) -> str:
        return f"{n},{e},{self.kind},{self.value},{' '.join(map(str, self.argmins))}"


def triples(n: int) -> Iterator[Triple]:
    """All (a, b, c) with a + b + c = n, lexicographically."""
    for a in range(n + 1):
        for b in range(n - a + 1):
            yield Triple(a, b, n - a - b)


def _check(t: Triple) -> None:
    if min(t) < 0:
        raise ValueError(f"triple {t} has a negative part")


def construct(t: Triple) -> Graph:
    _check(t)
    a, b, c = t
    n = a + b + c
    A = (1 << a) - 1
    B = ((1 << b) - 1) << a
    C = ((1 << c) - 1) << (a + b)
    adj = [(A & ~(1 << v)) | B for v in range(a)]
    adj += [A | C] * b
    adj += [B] * c
    return Graph(n, tuple(adj))


def profile(t: Triple) -> FamilyProfile:
    """Exact edge and non-triangular edge counts of G(a, b, c).

    Besides the bc edges between B and C, the A-B edges are non-triangular
    when a = 1, and the lone A edge is non-triangular when a = 2 and b = 0.
    """
    _check(t)
    a, b, c = t
    edges = a * (a - 1) // 2 + b * (a + c)
    nt = b * c
    if a == 1:
        nt += b
    elif a == 2 and b == 0:
        nt += 1
    return FamilyProfile(edges, nt)


def _range_check(n: int, e: int, lo: int) -> None:
    if n < 0 or not lo <= e <= n * (n - 1) // 2:
        raise ValueError(f"e={e} outside the admissible range [{lo}, {n * (n - 1) // 2}] for n={n}")


def _best_nontriangular(n: int, e: int) -> tuple[int, tuple[Triple, ...]]:
    best = -1
    argmax: list[Triple] = []
    for t in triples(n):
        p = profile(t)
        if p.edges < e:
            continue
        if p.non_triangular > best:
            best, argmax = p.non_triangular, [t]
        elif p.non_triangular == best:
            argmax.append(t)
    return best, tuple(argmax)


def g_formula(n: int, e: int) -> FormulaResult:
    """Fewest triangular edges over G(a, b, c) with at least e edges."""
    _range_check(n, e, n * n // 4 + 1)
    best, argmins = _best_nontriangular(n, e)
    return FormulaResult(e - best, argmins, "g")


def t_formula(n: int, e: int) -> FormulaResult:
    """Most non-triangular edges over the family; the true t(n, e) whenever some G(a, b, c) is optimal."""
    _range_check(n, e, 0)
    mantel = n * n // 4
    if e <= mantel:
        return FormulaResult(mantel, (Triple(0, (n + 1) // 2, n // 2),), "t")
    best, argmax = _best_nontriangular(n, e)
    return FormulaResult(best, argmax, "t")


def witness_construction(n: int, delta: Fraction | int | str) -> Triple:
    """Rounded density witness: c = floor(delta n / 2), b = floor(sqrt(delta) n).

    The profile is checked against ``(1/2 - delta) n^2 - n`` edges and
    ``delta^(3/2) n^2 / 2 - n`` non-triangular edges, exactly.
    """
    delta = Fraction(delta)
    if not 0 < delta < Fraction(1, 10):
        raise ValueError("delta must lie strictly between 0 and 1/10")
    c = math.floor(delta * n / 2)
    b = math.isqrt(math.floor(delta * n * n))
    if b < 1 or c < 1:
        raise ValueError(f"n={n} too small for delta={delta}: rounding leaves an empty part")
    if b + c > n:
        raise ValueError(f"infeasible rounding: b + c = {b + c} > n = {n}")
    t = Triple(n - b - c, b, c)
    p = profile(t)
    if p.edges < (Fraction(1, 2) - delta) * n * n - n:
        raise ArithmeticError(f"witness {t} misses the edge bound")
    # nt >= delta^(3/2) n^2 / 2 - n, squared to stay rational
    slack = p.non_triangular + n
    if 4 * slack * slack < delta ** 3 * n ** 4:
        raise ArithmeticError(f"witness {t} misses the non-triangular bound")
    return t

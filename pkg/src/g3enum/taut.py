"""Modified psi numbers and intersection pairings on the bubble-map spaces V1, V2, V3.

Notation used throughout:

``a``        hyperplane class pulled back by the shared evaluation point;
``psi``      c_1(L*), the ordinary cotangent line at the special point;
``modpsi``   c_1(calL*), psi minus the divisors where a constraint point
             collides with the special point.

With disjoint point constraints only single-point collisions occur.  On such
a collision stratum the special point sits on a rigid three-pointed ghost, so
``a`` and ``psi`` restrict to zero, the evaluation point is pinned to the
colliding constraint, and ``modpsi`` restricts to ``modpsi`` of the smaller
space.  That is the whole content of :func:`mpsi`.

V_k is the space of k degree-positive components through the 3d-4 points,
all meeting at one evaluation point; its complex dimension is 6-2k.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import comb, factorial
from typing import Iterator

from .descendant import desc
from .errors import DomainError, QueryError
from .gw_core import Kind, memoized


@memoized(Kind.MPSI)
def _mpsi(d: int, n: int, i: int, m: int, j: int) -> Fraction:
    if i + m + j != 3 * d - n:
        return Fraction(0)
    if j == 0:
        return desc(d, n, i, m)
    value = _mpsi(d, n, i, m + 1, j - 1)
    if i == 0 and m == 0 and n > 0:
        value -= n * _mpsi(d, n - 1, 2, 0, j - 1)
    return value


def mpsi(d: int, n: int, i: int, m: int, j: int) -> Fraction:
    """<a^i psi^m modpsi^j> over degree-d maps through n points with one special point.

    ``i = 2`` doubles as "special point constrained to a fixed general point".
    """
    if d < 1 or n < 0 or m < 0 or j < 0 or not 0 <= i <= 2:
        return Fraction(0)
    return _mpsi(d, n, i, m, j)


@dataclass(frozen=True)
class ComponentSpec:
    """Exponents carried by one component of a V2/V3 configuration."""

    d: int
    e: int
    m: int = 0
    j: int = 0

    @property
    def n(self) -> int:
        return 3 * self.d - self.e - self.m - self.j

    def value(self) -> Fraction:
        if self.d < 1 or self.n < 0:
            return Fraction(0)
        return mpsi(self.d, self.n, self.e, self.m, self.j)


def _check_degree(d: int, what: str) -> None:
    if d < 2:
        raise DomainError(f"{what} needs d >= 2, got {d}")


def v1_number(d: int, i: int, m: int, j: int) -> Fraction:
    """<a^i psi^m modpsi^j, [V1]>."""
    _check_degree(d, "v1_number")
    if i + m + j != 4:
        return Fraction(0)
    return mpsi(d, 3 * d - 4, i, m, j)


def v2_terms(
    d: int, p: int, slot_a: tuple[int, int], slot_b: tuple[int, int]
) -> Iterator[tuple[ComponentSpec, ComponentSpec, Fraction]]:
    """Contributions to the ordered V2 sum, one per (degree split, diagonal term)."""
    points = 3 * d - 4
    for d1 in range(1, d):
        d2 = d - d1
        for e in range(3):
            f = 2 + p - e
            if not 0 <= f <= 2:
                continue
            first = ComponentSpec(d1, e, *slot_a)
            second = ComponentSpec(d2, f, *slot_b)
            if first.n < 0 or second.n < 0 or first.n + second.n != points:
                continue
            yield first, second, comb(points, first.n) * first.value() * second.value()


def _v2_ordered(d: int, p: int, slot_a: tuple[int, int], slot_b: tuple[int, int]) -> Fraction:
    return sum((value for _, _, value in v2_terms(d, p, slot_a, slot_b)), Fraction(0))


def v2_number(
    d: int,
    p: int,
    slot_a: tuple[int, int],
    slot_b: tuple[int, int],
    symmetrize: bool = False,
) -> Fraction:
    """<a^p X_1 Y_2 (+ Y_1 X_2 if symmetrize), [V2]> for slot exponents X, Y = (m, j).

    Components are unordered, so the sum over ordered configurations is halved.
    """
    _check_degree(d, "v2_number")
    if p + sum(slot_a) + sum(slot_b) != 2:
        raise QueryError(f"V2 monomial has degree {p + sum(slot_a) + sum(slot_b)}, need 2")
    total = _v2_ordered(d, p, tuple(slot_a), tuple(slot_b))
    if symmetrize:
        total += _v2_ordered(d, p, tuple(slot_b), tuple(slot_a))
    return total / 2


def tau3(d: int) -> Fraction:
    """Number of three-component configurations in V3 (points split over three concurrent curves)."""
    _check_degree(d, "tau3")
    points = 3 * d - 4
    total = Fraction(0)
    for d1 in range(1, d - 1):
        for d2 in range(1, d - d1):
            degrees = (d1, d2, d - d1 - d2)
            for es in product(range(3), repeat=3):
                if sum(es) != 4:
                    continue
                specs = [ComponentSpec(dt, et) for dt, et in zip(degrees, es)]
                ns = [s.n for s in specs]
                if min(ns) < 0 or sum(ns) != points:
                    continue
                ways = factorial(points) // (factorial(ns[0]) * factorial(ns[1]) * factorial(ns[2]))
                term = Fraction(ways)
                for s in specs:
                    term *= s.value()
                total += term
    return total / 6


class Space(enum.Enum):
    V1 = "V1"
    V2 = "V2"
    V3 = "V3"
    S1 = "S1"


SPACE_DEGREE = {Space.V1: 4, Space.V2: 2, Space.V3: 0, Space.S1: 2}


@dataclass(frozen=True)
class Term:
    """``coef * a^a * (slot exponents)``.

    V1 and S1 terms carry one slot (psi power, modpsi power); V2 terms carry
    two slots and stand for the symmetric class X_1 Y_2 + Y_1 X_2 (just X_1 X_2
    when the slots coincide); V3 terms carry none.
    """

    coef: int
    a: int
    slots: tuple[tuple[int, int], ...] = ()

    @property
    def degree(self) -> int:
        return self.a + sum(m + j for m, j in self.slots)


@dataclass(frozen=True)
class SpaceQuery:
    space: Space
    terms: tuple[Term, ...] = field(default_factory=tuple)

    def validate(self) -> None:
        slot_count = {Space.V1: 1, Space.S1: 1, Space.V2: 2, Space.V3: 0}[self.space]
        for t in self.terms:
            if len(t.slots) != slot_count:
                raise QueryError(f"{self.space.value} terms need {slot_count} slots: {t}")
            if t.a < 0 or any(m < 0 or j < 0 for m, j in t.slots):
                raise QueryError(f"negative exponent in {t}")
            if t.degree != SPACE_DEGREE[self.space]:
                raise QueryError(
                    f"{self.space.value} term {t} has degree {t.degree}, "
                    f"need {SPACE_DEGREE[self.space]}"
                )
            if self.space is Space.S1 and (t.slots[0][0] != 0 or (t.a, t.slots[0][1]) not in S1_RULES):
                raise QueryError(f"unsupported S1 monomial {t}")


def v1(*terms: tuple[int, int, int, int]) -> SpaceQuery:
    """``v1((coef, a, psi, modpsi), ...)``"""
    return SpaceQuery(Space.V1, tuple(Term(c, a, ((m, j),)) for c, a, m, j in terms))


def v2(*terms: tuple[int, int, tuple[int, int], tuple[int, int]]) -> SpaceQuery:
    """``v2((coef, a, slot_a, slot_b), ...)``"""
    return SpaceQuery(Space.V2, tuple(Term(c, a, (tuple(x), tuple(y))) for c, a, x, y in terms))


def s1(*terms: tuple[int, int, int]) -> SpaceQuery:
    """``s1((coef, a, modpsi), ...)``"""
    return SpaceQuery(Space.S1, tuple(Term(c, a, ((0, j),)) for c, a, j in terms))


def v3(coef: int = 1) -> SpaceQuery:
    return SpaceQuery(Space.V3, (Term(coef, 0),))


# common symmetric classes on V2
A2 = (2, (0, 0), (0, 0))
A_SIGMA1 = (1, (0, 1), (0, 0))
SIGMA2 = (0, (0, 2), (0, 0))
PI = (0, (0, 1), (0, 1))
PSI_SIGMA2 = (0, (2, 0), (0, 0))
PSI_PI = (0, (1, 0), (1, 0))


# <a^i modpsi^j, [S1]> in terms of V1 and V2 numbers (cuspidal-locus identities)
S1_RULES: dict[tuple[int, int], tuple[SpaceQuery, SpaceQuery]] = {
    (2, 0): (v1((1, 2, 0, 2)), v2((-1, *A2))),
    (1, 1): (v1((3, 2, 0, 2), (1, 1, 0, 3)), v2()),
    (0, 2): (v1((3, 2, 0, 2), (3, 1, 0, 3), (1, 0, 0, 4)), v2()),
}


def _term_value(space: Space, d: int, t: Term) -> Fraction:
    if space is Space.V1:
        (m, j), = t.slots
        return v1_number(d, t.a, m, j)
    if space is Space.V2:
        x, y = t.slots
        return v2_number(d, t.a, x, y, symmetrize=x != y)
    if space is Space.V3:
        return tau3(d)
    (_, j), = t.slots
    return sum((evaluate(q, d) for q in S1_RULES[(t.a, j)]), Fraction(0))


def evaluate(query: SpaceQuery, d: int) -> Fraction:
    """Integrate a class polynomial over the space named by ``query`` at degree d."""
    _check_degree(d, "evaluate")
    query.validate()
    return sum((t.coef * _term_value(query.space, d, t) for t in query.terms), Fraction(0))


def combine(d: int, *parts: tuple[int, SpaceQuery] | SpaceQuery) -> Fraction:
    """Sum of ``coef * evaluate(query)`` over ``(coef, query)`` pairs."""
    total = Fraction(0)
    for part in parts:
        coef, query = part if isinstance(part, tuple) else (1, part)
        total += coef * evaluate(query, d)
    return total


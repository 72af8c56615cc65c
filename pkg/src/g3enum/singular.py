"""Counts of singular rational plane curves through 3d-4 general points.

* ``s21``   two-component curves meeting at a node where one branch is cuspidal
* ``s22_a``, ``s22_lambda``  pairings on the closure of the tacnodal locus
* ``s1_class``  pairings on the closure of the cuspidal locus
* ``nd22``  signed zero count of the tacnodal-direction section
* ``s12``   irreducible rational curves with a (3,4)-cusp, by two formulas

All are integer combinations of V1/V2 numbers and tau3.
"""

from __future__ import annotations

import enum
from fractions import Fraction

from .errors import ConsistencyError, DomainError
from .taut import (
    A2,
    A_SIGMA1,
    PI,
    PSI_PI,
    PSI_SIGMA2,
    S1_RULES,
    SIGMA2,
    combine,
    s1,
    tau3,
    v1,
    v2,
)


class S12Route(enum.Enum):
    COROLLARY = "corollary"
    LEMMA = "lemma"


def _check(d: int) -> None:
    if d < 2:
        raise DomainError(f"degree must be >= 2, got {d}")


def require_count(name: str, value: Fraction, nonnegative: bool = True) -> Fraction:
    if value.denominator != 1:
        raise ConsistencyError(f"{name} = {value} is not an integer")
    if nonnegative and value < 0:
        raise ConsistencyError(f"{name} = {value} is negative")
    return value


def s21(d: int) -> Fraction:
    _check(d)
    value = combine(d, v2((6, *A2), (3, *A_SIGMA1), (1, *SIGMA2))) - 3 * tau3(d)
    return require_count(f"|S21({d})|", value)


def s22_a(d: int) -> Fraction:
    _check(d)
    return combine(d, v2((3, *A2), (1, *A_SIGMA1)))


def s22_lambda(d: int) -> Fraction:
    # the psi-squared and product terms use ordinary psi, not modified psi
    _check(d)
    return combine(d, v2((3, *A2), (3, *A_SIGMA1), (1, *PSI_SIGMA2), (1, *PSI_PI)))


def s1_class(d: int, i: int, j: int) -> Fraction:
    """<a^i modpsi^j, [closure of the cuspidal locus]> for i + j = 2."""
    _check(d)
    if (i, j) not in S1_RULES:
        raise DomainError(f"no S1 identity for a^{i} modpsi^{j}")
    return combine(d, *S1_RULES[(i, j)])


def nd22(d: int) -> Fraction:
    _check(d)
    return combine(d, v2((6, *A2), (3, *A_SIGMA1), (1, *PI)))


def nd22_via_s21(d: int) -> Fraction:
    """The same number, before the node-cusp count is substituted back in."""
    _check(d)
    total = combine(d, v2((12, *A2), (6, *A_SIGMA1), (1, *SIGMA2), (1, *PI)))
    return total - s21(d) - 3 * tau3(d)


def s12(d: int, route: S12Route | str = S12Route.COROLLARY) -> Fraction:
    _check(d)
    route = S12Route(route)
    if route is S12Route.COROLLARY:
        value = (
            combine(d, v1((33, 2, 0, 2), (18, 1, 0, 3), (4, 0, 0, 4)))
            + 3 * tau3(d)
            - combine(d, v2((21, *A2), (9, *A_SIGMA1), (2, *SIGMA2), (1, *PI)))
        )
    else:
        value = (
            combine(d, s1((3, 2, 0), (6, 1, 1), (4, 0, 2)))
            - 2 * s21(d)
            - 3 * tau3(d)
            - combine(d, v2((6, *A2), (3, *A_SIGMA1), (1, *PI)))
        )
    return require_count(f"|S12({d})| ({route.value})", value)

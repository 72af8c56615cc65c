"""The genus-three correction CR_3 and the final counts n_{3,d}.

CR_3 collects the perturbed solutions near maps whose genus-three component
is constant.  It is assembled two ways:

* ``THEOREM``: 12 times a single class polynomial on V1, V2, V3;
* ``COROLLARY``: a weighted sum of six contributions n_m^(k), one per number
  m of bubbles and multiplicity k, plus the (3,4)-cusp term.

A genus-three domain with ``hyperflexes`` Weierstrass points of gap type (1,4)
shifts the (3,4)-cusp weight from 96 to 96 + 2 * hyperflexes.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, fields
from fractions import Fraction
from typing import Mapping

from .errors import ConsistencyError, DomainError
from .rt import rt_standard
from .singular import require_count, s12, s1_class, s21
from .taut import A2, A_SIGMA1, PI, SIGMA2, combine, tau3, v1, v2, v3

CUSP_WEIGHT = 96


class Cr3Route(enum.Enum):
    THEOREM = "theorem"
    COROLLARY = "corollary"
    BOTH = "both"


@dataclass(frozen=True)
class Report:
    """A named enumerative quantity at one degree, with the route that produced it."""

    quantity: str
    degree: int
    value: Fraction
    route: str = ""

    def __post_init__(self):
        require_count(f"{self.quantity}({self.degree})", Fraction(self.value), nonnegative=False)


@dataclass(frozen=True)
class Cr3Breakdown:
    degree: int
    n11: Fraction
    n12: Fraction
    n13: Fraction
    n21: Fraction
    n22: Fraction
    n31: Fraction
    s12: Fraction
    s21: Fraction
    tau3: Fraction
    cr3_theorem: Fraction
    cr3_corollary: Fraction

    def check(self) -> "Cr3Breakdown":
        for f in fields(self):
            if f.name == "degree":
                continue
            require_count(f.name, getattr(self, f.name), nonnegative=False)
        if self.cr3_theorem != self.cr3_corollary:
            raise ConsistencyError(
                f"CR3({self.degree}): theorem route {self.cr3_theorem} "
                f"!= corollary route {self.cr3_corollary}"
            )
        return self

    def as_dict(self) -> dict[str, Fraction]:
        return {f.name: getattr(self, f.name) for f in fields(self) if f.name != "degree"}


def _check(d: int) -> None:
    if d < 2:
        raise DomainError(f"degree must be >= 2, got {d}")


def n11(d: int) -> Fraction:
    _check(d)
    return Fraction(0)


def n12(d: int) -> Fraction:
    _check(d)
    on_cusps = 7 * s1_class(d, 2, 0) + 6 * s1_class(d, 1, 1)
    return 12 * on_cusps - 12 * combine(d, v2((9, *A2), (3, *A_SIGMA1)))


def n13(d: int) -> Fraction:
    return 12 * s12(d)


def n21(d: int) -> Fraction:
    # symmetric reading 3a(modpsi_1 + modpsi_2) + modpsi_1 modpsi_2
    _check(d)
    return 12 * combine(d, v2((10, *A2), (3, *A_SIGMA1), (1, *PI)))


def n22(d: int) -> Fraction:
    return 36 * s21(d)


def n31(d: int) -> Fraction:
    return 36 * tau3(d)


def component_counts(d: int) -> dict[str, Fraction]:
    _check(d)
    return {
        "n11": n11(d),
        "n12": n12(d),
        "n13": n13(d),
        "n21": n21(d),
        "n22": n22(d),
        "n31": n31(d),
    }


def cr3_theorem(d: int) -> Fraction:
    _check(d)
    twelfth = combine(
        d,
        v1((413, 2, 0, 2), (210, 1, 0, 3), (44, 0, 0, 4)),
        (-1, v2((217, *A2), (84, *A_SIGMA1), (16, *SIGMA2), (10, *PI))),
        v3(18),
    )
    return 12 * twelfth


def cr3_corollary(d: int, hyperflexes: int = 0) -> Fraction:
    c = component_counts(d)
    return (
        c["n11"] + 2 * c["n12"] + 3 * c["n13"]
        + (CUSP_WEIGHT + 2 * hyperflexes) * s12(d)
        + c["n21"] + 2 * c["n22"]
        + c["n31"]
    )


def cr3(d: int, hyperflexes: int = 0, route: Cr3Route | str = Cr3Route.BOTH) -> Fraction:
    _check(d)
    if hyperflexes < 0:
        raise DomainError(f"hyperflex count must be >= 0, got {hyperflexes}")
    route = Cr3Route(route)
    if route is Cr3Route.COROLLARY:
        return cr3_corollary(d, hyperflexes)
    theorem = cr3_theorem(d) + 2 * hyperflexes * s12(d)
    if route is Cr3Route.BOTH:
        corollary = cr3_corollary(d, hyperflexes)
        if theorem != corollary:
            raise ConsistencyError(f"CR3({d}): theorem {theorem} != corollary {corollary}")
    return theorem


def breakdown(d: int) -> Cr3Breakdown:
    c = component_counts(d)
    return Cr3Breakdown(
        degree=d,
        s12=s12(d),
        s21=s21(d),
        tau3=tau3(d),
        cr3_theorem=cr3_theorem(d),
        cr3_corollary=cr3_corollary(d),
        **c,
    ).check()


def n3d(
    d: int,
    hyperflexes: int = 0,
    rt_overrides: Mapping[tuple[int, int], Fraction] | None = None,
) -> Fraction:
    """Genus-three degree-d curves through 3d-4 points with fixed normalization.

    With hyperflexes > 0 this is the count before dividing by |Aut(Sigma, j)|.
    """
    _check(d)
    value = rt_standard(3, d, rt_overrides) - cr3(d, hyperflexes, Cr3Route.COROLLARY)
    return require_count(f"n_3,{d}", value)

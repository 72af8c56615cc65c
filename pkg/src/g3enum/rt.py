"""Ruan-Tian invariants RT_{g,d} of P^2 with fixed domain complex structure, g <= 3.

Each handle of the domain is traded for a pair of fixed genus-0 domain points
carrying the diagonal of P^2, written in the basis {1, H, pt}.  The resulting
genus-0 invariant with k >= 3 fixed domain points is rigidified by
degenerating the domain to a caterpillar: a chain of k-2 three-pointed
components, the first and last holding two fixed points each and the middle
ones one each.  Every component is then an ordinary three-slot genus-0
invariant with some of the free point constraints.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import factorial
from typing import Iterator, Mapping, Sequence

from .errors import DomainError, QueryError
from .gw_core import Kind, memoized, parse_scalar, primary_insertions

# codimension pairs (c, 2 - c) of the diagonal's Kunneth decomposition
DIAGONAL = ((0, 2), (1, 1), (2, 0))

MAX_GENUS = 3


@dataclass(frozen=True)
class RTQuery:
    g: int
    d: int
    fixed: tuple[int, ...] = ()
    n_free: int = 0

    def __post_init__(self):
        object.__setattr__(self, "fixed", tuple(int(c) for c in self.fixed))
        if not 0 <= self.g <= MAX_GENUS:
            raise QueryError(f"genus must be in 0..{MAX_GENUS}, got {self.g}")
        if self.d < 1:
            raise QueryError(f"degree must be >= 1, got {self.d}")
        if self.n_free < 0 or any(not 0 <= c <= 2 for c in self.fixed):
            raise QueryError(f"bad constraints in {self}")

    @property
    def balanced(self) -> bool:
        return sum(self.fixed) + self.n_free == 3 * self.d + 2 * (1 - self.g)

    @classmethod
    def standard(cls, g: int, d: int) -> "RTQuery":
        """The all-points query for genus g, e.g. RT_{3,d}(; pt^{3d-4})."""
        if g == 0:
            return cls(0, d, (2, 2, 2), 3 * d - 4)
        if g == 1:
            return cls(1, d, (2,), 3 * d - 2)
        return cls(g, d, (), 3 * d + 2 - 2 * g)


def load_rt_overrides(path: str | os.PathLike) -> dict[tuple[int, int], Fraction]:
    """Read ``g d value`` lines; values are integers or ``p/q`` rationals."""
    table: dict[tuple[int, int], Fraction] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 3:
                raise QueryError(f"{path}:{lineno}: expected 'g d value', got {raw.strip()!r}")
            try:
                g, d, value = int(parts[0]), int(parts[1]), parse_scalar(parts[2])
            except ValueError as exc:
                raise QueryError(f"{path}:{lineno}: {exc}") from None
            table[(g, d)] = value
    return table


def rt(q: RTQuery, overrides: Mapping[tuple[int, int], Fraction] | None = None) -> Fraction:
    """RT_{g,d}(fixed; pt^n_free).  Override values apply to standard queries only."""
    if overrides and q == RTQuery.standard(q.g, q.d) and (q.g, q.d) in overrides:
        return Fraction(overrides[(q.g, q.d)])
    if not q.balanced:
        return Fraction(0)
    return _rt(q.g, q.d, q.fixed, q.n_free)


def _rt(g: int, d: int, fixed: tuple[int, ...], n: int) -> Fraction:
    if g > 0:
        return sum((_rt(g - 1, d, fixed + pair, n) for pair in DIAGONAL), Fraction(0))
    if len(fixed) < 3:
        # fewer than three fixed points: the domain is not rigid, plain GW invariant
        return primary_insertions(d, list(fixed) + [2] * n)
    return rigid0(d, fixed, n)


def rigid0(d: int, fixed: Sequence[int], n: int) -> Fraction:
    """Genus-0 invariant with k >= 3 fixed domain points carrying H^c, c in ``fixed``."""
    fixed = tuple(fixed)
    if len(fixed) < 3:
        raise DomainError(f"rigid0 needs at least 3 fixed points, got {len(fixed)}")
    if d < 0 or n < 0:
        return Fraction(0)
    return _rigid0(d, n, *fixed)


@memoized(Kind.RT)
def _rigid0(d: int, n: int, *fixed: int) -> Fraction:
    k = len(fixed)
    if k == 3:
        return primary_insertions(d, list(fixed) + [2] * n)
    links = k - 3
    total = Fraction(0)
    for degrees in _compositions(d, k - 2):
        for basis in product(range(3), repeat=links):
            slots = _caterpillar_slots(fixed, basis)
            counts = []
            for dt, cs in zip(degrees, slots):
                nt = 3 * dt + 2 - sum(cs)
                if nt < 0:
                    break
                counts.append(nt)
            else:
                if sum(counts) != n:
                    continue
                term = Fraction(factorial(n))
                for dt, cs, nt in zip(degrees, slots, counts):
                    term = term / factorial(nt) * primary_insertions(dt, list(cs) + [2] * nt)
                    if not term:
                        break
                total += term
    return total


def _caterpillar_slots(fixed: Sequence[int], basis: Sequence[int]) -> list[tuple[int, ...]]:
    """Codimensions on each component; node t carries basis[t] left, 2 - basis[t] right."""
    k = len(fixed)
    slots = [(fixed[0], fixed[1], basis[0])]
    for t in range(1, k - 3):
        slots.append((2 - basis[t - 1], fixed[t + 1], basis[t]))
    slots.append((2 - basis[-1], fixed[-2], fixed[-1]))
    return slots


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def rt_standard(g: int, d: int, overrides: Mapping[tuple[int, int], Fraction] | None = None) -> Fraction:
    return rt(RTQuery.standard(g, d), overrides)

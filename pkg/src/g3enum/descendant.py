"""Genus-0 invariants of P^2 with a single descendant point.

``desc(d, n, i, m)`` is <tau_m(H^i), pt^n>_d.  Internally the engine works with
the family G(d, n, h, i, m) = <tau_m(H^i), H^h, pt^n>_d: auxiliary divisor
insertions are added (inverse divisor equation) until two reference slots
exist, then the topological recursion relation lowers m by one, splitting the
curve into two pieces joined through the diagonal {(1,pt), (H,H), (pt,1)}.
The new diagonal insertion on the descendant side is removed at once by the
string, divisor or point rule.  Only one psi-carrying point ever appears.
"""

from __future__ import annotations

import contextlib
from contextvars import ContextVar
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterator

from .errors import DomainError
from .gw_core import Kind, MemoStore, deg0_integral, memoized, primary_insertions, using_store

# codimension of phi and of its dual phi^v in the diagonal splitting
DIAGONAL = ((0, 2), (1, 1), (2, 0))

REFERENCE_CHOICES = ("points", "divisors", "mixed")


@dataclass(frozen=True)
class Route:
    """How the TRR picks its two reference slots, and whether to pad eagerly.

    ``points`` takes the first two slots with point constraints listed before
    auxiliary divisors (the canonical order); ``divisors`` prefers divisor
    slots; ``mixed`` takes one of each when it can.  ``eager_padding`` applies
    one extra inverse-divisor step at the top of every public evaluation.
    """

    references: str = "points"
    eager_padding: bool = False

    def __post_init__(self):
        if self.references not in REFERENCE_CHOICES:
            raise ValueError(f"unknown reference choice {self.references!r}")


CANONICAL = Route()
_ROUTE: ContextVar[Route] = ContextVar("g3enum_route", default=CANONICAL)


@contextlib.contextmanager
def alternate_route(route: Route, store: MemoStore | None = None) -> Iterator[MemoStore]:
    """Evaluate under ``route`` against a private store.

    The store must be private: memo keys do not record the route, so sharing
    the canonical store would silently reuse canonical values.
    """
    store = store if store is not None else MemoStore()
    token = _ROUTE.set(route)
    try:
        with using_store(store):
            yield store
    finally:
        _ROUTE.reset(token)


def desc(d: int, n: int, i: int, m: int) -> Fraction:
    """<tau_m(H^i), pt^n>_d, the psi^m a^i number over maps through n points."""
    if d < 1:
        raise DomainError(f"desc needs d >= 1, got {d}")
    if not 0 <= i <= 2 or n < 0 or m < 0:
        raise DomainError(f"desc key out of range: n={n}, i={i}, m={m}")
    if i + m != 3 * d - n:
        return Fraction(0)
    if m > 0 and _ROUTE.get().eager_padding:
        return (padded(d, n, 1, i, m) - padded(d, n, 0, i + 1, m - 1)) / d
    return padded(d, n, 0, i, m)


@memoized(Kind.DESC)
def padded(d: int, n: int, h: int, i: int, m: int) -> Fraction:
    """G(d, n, h, i, m) = <tau_m(H^i), H^h, pt^n>_d; divisor slots do not shift the dimension."""
    if i > 2 or m < 0:
        return Fraction(0)
    if d == 0:
        return deg0_integral([i] + [1] * h + [2] * n, m)
    if i + m + n != 3 * d:
        return Fraction(0)
    if m == 0:
        return primary_insertions(d, [i] + [1] * h + [2] * n)
    if n + h < 2:
        return (padded(d, n, h + 1, i, m) - padded(d, n, h, i + 1, m - 1)) / d
    return _trr(d, n, h, i, m)


def _references(n: int, h: int) -> tuple[tuple[int, int], int, int]:
    """Codimensions of the two reference slots and the leftover (h, n)."""
    choice = _ROUTE.get().references
    if choice == "mixed" and n >= 1 and h >= 1:
        return (2, 1), h - 1, n - 1
    if choice == "divisors":
        take_h = min(h, 2)
    else:
        take_h = max(0, 2 - n)
    take_n = 2 - take_h
    return (2,) * take_n + (1,) * take_h, h - take_h, n - take_n


def _trr(d: int, n: int, h: int, i: int, m: int) -> Fraction:
    refs, rest_h, rest_n = _references(n, h)
    total = Fraction(0)
    for d1 in range(d + 1):
        d2 = d - d1
        for a in range(rest_h + 1):
            for b in range(rest_n + 1):
                ways = comb(rest_h, a) * comb(rest_n, b)
                for phi, dual in DIAGONAL:
                    right = primary_insertions(
                        d2, [dual, *refs] + [1] * (rest_h - a) + [2] * (rest_n - b)
                    )
                    if not right:
                        continue
                    left = _with_diagonal(d1, b, a, i, m - 1, phi)
                    if left:
                        total += ways * left * right
    return total


def _with_diagonal(d: int, n: int, h: int, i: int, m: int, phi: int) -> Fraction:
    """<tau_m(H^i), H^h, pt^n, H^phi>_d with the H^phi slot reduced away."""
    if d == 0:
        return deg0_integral([i] + [1] * h + [2] * n + [phi], m)
    if phi == 0:
        return padded(d, n, h, i, m - 1) if m >= 1 else Fraction(0)
    if phi == 1:
        value = d * padded(d, n, h, i, m)
        if m >= 1:
            value += padded(d, n, h, i + 1, m - 1)
        return value
    return padded(d, n + 1, h, i, m)

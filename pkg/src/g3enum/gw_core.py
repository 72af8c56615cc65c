"""Exact scalars, the shared memo store, and genus-0 primary invariants of P^2.

Everything downstream bottoms out in three functions here:

* :func:`kontsevich` -- N_d, rational degree-d plane curves through 3d-1 points;
* :func:`primary_insertions` -- <H^{c_1}, ..., H^{c_k}>_d for codimensions c_i in 0..2;
* :func:`deg0_integral` -- degree-0 integrals, i.e. the plane's triple product
  tensored with a psi-integral over the k-pointed genus-0 Deligne-Mumford space.

Memoized values live in a :class:`MemoStore`.  The active store is held in a
context variable so alternative evaluation routes (used to audit the
recursions) can run against a private store without touching the default one.
"""

from __future__ import annotations

import contextlib
import enum
import functools
import os
import threading
from contextvars import ContextVar
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from pathlib import Path
from typing import Callable, Iterable, Iterator, Sequence

from .errors import DomainError, MemoConflictError

ExactScalar = Fraction

CACHE_ENV = "G3ENUM_CACHE"


class Kind(enum.Enum):
    PRIMARY = "PRIMARY"
    DESC = "DESC"
    MPSI = "MPSI"
    RT = "RT"


_KIND_ORDER = {k: n for n, k in enumerate(Kind)}


@functools.total_ordering
@dataclass(frozen=True)
class InvariantKey:
    """Canonical descriptor of one memoized invariant.

    Parameter layouts:

    ``PRIMARY``  (d, n, e)           N_d stored as (d, 3d-2, 2)
    ``DESC``     (d, n, h, i, m)     <tau_m(H^i), H^h, pt^n>_d
    ``MPSI``     (d, n, i, m, j)     <a^i psi^m modpsi^j> over maps through n points
    ``RT``       (d, n, c_1..c_k)    rigidified genus-0 invariant, fixed classes c
    """

    kind: Kind
    params: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))

    def __lt__(self, other: "InvariantKey") -> bool:
        if not isinstance(other, InvariantKey):
            return NotImplemented
        return (_KIND_ORDER[self.kind], self.params) < (_KIND_ORDER[other.kind], other.params)

    def __str__(self) -> str:
        return f"{self.kind.value}:{','.join(map(str, self.params))}"

    @classmethod
    def parse(cls, text: str) -> "InvariantKey":
        kind, _, body = text.partition(":")
        params = tuple(int(p) for p in body.split(",")) if body else ()
        return cls(Kind(kind), params)


def format_scalar(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def parse_scalar(text: str) -> Fraction:
    num, _, den = text.partition("/")
    return Fraction(int(num), int(den or 1))


class MemoStore:
    """Write-once map from :class:`InvariantKey` to exact values.

    Reads are lock-free; writers serialize on an internal lock.  Binding a key
    that already holds a different value raises :class:`MemoConflictError`.
    The on-disk format is one ``key<TAB>num/den`` record per line, sorted by key.
    """

    def __init__(self, path: str | os.PathLike | None = None):
        self._data: dict[InvariantKey, Fraction] = {}
        self._lock = threading.Lock()
        self.path = Path(path) if path else None
        self.hits = 0
        self.misses = 0
        if self.path is not None and self.path.exists():
            self.load(self.path)

    def __len__(self) -> int:
        return len(self._data)

    def __contains__(self, key: InvariantKey) -> bool:
        return key in self._data

    def __iter__(self) -> Iterator[InvariantKey]:
        return iter(sorted(self._data))

    def get(self, key: InvariantKey) -> Fraction | None:
        value = self._data.get(key)
        if value is None:
            self.misses += 1
        else:
            self.hits += 1
        return value

    def bind(self, key: InvariantKey, value) -> Fraction:
        value = Fraction(value)
        with self._lock:
            old = self._data.get(key)
            if old is not None and old != value:
                raise MemoConflictError(f"{key} already bound to {old}, refusing {value}")
            self._data[key] = value
        return value

    def items(self) -> list[tuple[InvariantKey, Fraction]]:
        return [(k, self._data[k]) for k in sorted(self._data)]

    def dump(self, path: str | os.PathLike | None = None) -> Path:
        target = Path(path) if path else self.path
        if target is None:
            raise ValueError("no cache path given")
        lines = [f"{key}\t{format_scalar(value)}\n" for key, value in self.items()]
        target.write_text("".join(lines), encoding="utf-8")
        return target

    def load(self, path: str | os.PathLike) -> int:
        count = 0
        with open(path, encoding="utf-8") as fh:
            for line in fh:
                line = line.rstrip("\n")
                if not line:
                    continue
                key, value = line.split("\t")
                self.bind(InvariantKey.parse(key), parse_scalar(value))
                count += 1
        return count


_ACTIVE_STORE: ContextVar[MemoStore | None] = ContextVar("g3enum_store", default=None)
_DEFAULT_STORE: MemoStore | None = None
_DEFAULT_LOCK = threading.Lock()


def default_store() -> MemoStore:
    global _DEFAULT_STORE
    with _DEFAULT_LOCK:
        if _DEFAULT_STORE is None:
            _DEFAULT_STORE = MemoStore(os.environ.get(CACHE_ENV) or None)
        return _DEFAULT_STORE


def set_default_store(store: MemoStore | None) -> None:
    global _DEFAULT_STORE
    with _DEFAULT_LOCK:
        _DEFAULT_STORE = store


def get_store() -> MemoStore:
    store = _ACTIVE_STORE.get()
    return store if store is not None else default_store()


@contextlib.contextmanager
def using_store(store: MemoStore) -> Iterator[MemoStore]:
    """Route every memoized evaluation in this context through ``store``."""
    token = _ACTIVE_STORE.set(store)
    try:
        yield store
    finally:
        _ACTIVE_STORE.reset(token)


_EVALUATORS: dict[Kind, Callable[..., Fraction]] = {}


def memoized(kind: Kind) -> Callable:
    """Cache an integer-argument function in the active store under ``kind``.

    One function per kind; :func:`compute_key` uses this to re-evaluate any
    stored key from scratch.
    """

    def decorate(func):
        @functools.wraps(func)
        def wrapper(*params: int) -> Fraction:
            store = get_store()
            key = InvariantKey(kind, params)
            value = store.get(key)
            if value is None:
                value = store.bind(key, func(*params))
            return value

        wrapper.uncached = func
        _EVALUATORS[kind] = wrapper
        return wrapper

    return decorate


def compute_key(key: InvariantKey) -> Fraction:
    """Evaluate ``key`` in the active store (the defining modules must be imported)."""
    return _EVALUATORS[key.kind](*key.params)


def kontsevich(d: int) -> Fraction:
    """Number N_d of rational degree-d plane curves through 3d-1 general points."""
    if d < 1:
        raise DomainError(f"kontsevich needs d >= 1, got {d}")
    return _kontsevich(d, 3 * d - 2, 2)


@memoized(Kind.PRIMARY)
def _kontsevich(d: int, _n: int, _e: int) -> Fraction:
    if d == 1:
        return Fraction(1)
    total = 0
    for d1 in range(1, d):
        d2 = d - d1
        total += (
            kontsevich(d1) * kontsevich(d2) * d1 * d1 * d2
            * (d2 * comb(3 * d - 4, 3 * d1 - 2) - d1 * comb(3 * d - 4, 3 * d1 - 1))
        )
    return Fraction(total)


def deg0_integral(codims: Sequence[int], m: int) -> Fraction:
    """Degree-0 invariant with insertions H^c (c in ``codims``) and psi^m at one point.

    The moduli space is P^2 x M_{0,k}, so the value is 1 exactly when the
    codimensions sum to 2 and m fills the k-3 dimensions of M_{0,k}.
    """
    k = len(codims)
    if k < 3:
        return Fraction(0)
    return Fraction(int(m == k - 3 and sum(codims) == 2))


def primary_insertions(d: int, codims: Iterable[int]) -> Fraction:
    """<H^{c_1}, ..., H^{c_k}>_d in genus 0, without psi classes.

    For d >= 1 a fundamental-class insertion kills the invariant (string),
    each H contributes a factor d (divisor), and what remains is N_d when
    exactly 3d-1 point classes are left.
    """
    codims = list(codims)
    if d < 0:
        return Fraction(0)
    if d == 0:
        return deg0_integral(codims, 0)
    if any(c == 0 for c in codims):
        return Fraction(0)
    if any(c < 0 or c > 2 for c in codims):
        return Fraction(0)
    points = codims.count(2)
    if points != 3 * d - 1:
        return Fraction(0)
    return d ** codims.count(1) * kontsevich(d)


def primary(d: int, n: int, e: int) -> Fraction:
    """<H^e, pt^n>_d: n general point constraints and one H^e insertion."""
    if d == 0:
        return deg0_integral([e] + [2] * n, 0)
    if d < 0 or n < 0 or not 0 <= e <= 2:
        return Fraction(0)
    return primary_insertions(d, [e] + [2] * n)

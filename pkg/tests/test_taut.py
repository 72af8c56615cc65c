import random
from fractions import Fraction
from math import comb

import pytest

from g3enum import DomainError, QueryError, desc, evaluate, mpsi, tau3, v1_number, v2_number
from g3enum.taut import (
    A2,
    A_SIGMA1,
    PI,
    PSI_PI,
    PSI_SIGMA2,
    S1_RULES,
    SIGMA2,
    ComponentSpec,
    SpaceQuery,
    Space,
    Term,
    combine,
    s1,
    v1,
    v2,
    v2_terms,
    v3,
)

from oracles import mpsi_oracle, tau3_oracle, v2_oracle

SLOTS = [(0, 0), (0, 1), (1, 0), (0, 2), (2, 0), (1, 1)]


def _mpsi_keys(dmax):
    return [
        (d, 3 * d - i - m - j, i, m, j)
        for d in range(1, dmax + 1)
        for i in range(3)
        for m in range(5)
        for j in range(5)
        if 3 * d - i - m - j >= 0
    ]


def test_mpsi_examples():
    assert mpsi(2, 2, 2, 0, 2) == 1
    assert mpsi(1, 2, 0, 0, 1) == -2


def test_mpsi_without_modified_classes_is_desc():
    for d, n, i, m, j in _mpsi_keys(3):
        if j == 0:
            assert mpsi(d, n, i, m, 0) == desc(d, n, i, m)


def test_mpsi_correction_only_on_bare_special_point():
    for d, n, i, m, j in _mpsi_keys(3):
        if j >= 1 and (i >= 1 or m >= 1):
            assert mpsi(d, n, i, m, j) == mpsi(d, n, i, m + 1, j - 1)


def test_mpsi_against_oracle():
    for key in _mpsi_keys(3):
        if key[1] <= 6:
            assert mpsi(*key) == mpsi_oracle(*key), key


def test_mpsi_out_of_range_is_zero():
    assert mpsi(0, 1, 2, 0, 0) == 0
    assert mpsi(1, 1, 3, 0, 0) == 0
    assert mpsi(1, -1, 2, 0, 0) == 0


def test_v1_examples():
    assert v1_number(2, 2, 0, 2) == 1
    assert v1_number(3, 2, 2, 0) == desc(3, 5, 2, 2)
    assert v1_number(3, 2, 0, 1) == 0


def test_v2_examples():
    assert v2_number(2, 2, (0, 0), (0, 0)) == 1
    assert v2_number(3, 2, (0, 0), (0, 0)) == 5
    assert v2_number(2, 1, (0, 1), (0, 0), symmetrize=True) == -1


@pytest.mark.parametrize("d", [2, 3, 4])
def test_v2_against_oracle(d):
    for p in range(3):
        for a in SLOTS:
            for b in SLOTS:
                if p + sum(a) + sum(b) != 2:
                    continue
                for sym in (False, True):
                    assert v2_number(d, p, a, b, sym) == v2_oracle(d, p, a, b, sym), (d, p, a, b, sym)


def test_v2_slot_swap_symmetry():
    for d in range(2, 6):
        for a in SLOTS:
            for b in SLOTS:
                p = 2 - sum(a) - sum(b)
                if p < 0:
                    continue
                assert v2_number(d, p, a, b, True) == v2_number(d, p, b, a, True)


def test_v2_terms_palindromic():
    # swapping the two components maps each term to its mirror
    for d in range(2, 6):
        terms = {(x.d, x.e, y.d, y.e): v for x, y, v in v2_terms(d, 2, (0, 0), (0, 0))}
        for (d1, e, d2, f), v in terms.items():
            assert terms[(d2, f, d1, e)] == v


def test_v2_degree_error():
    with pytest.raises(QueryError):
        v2_number(3, 1, (0, 0), (0, 0))
    with pytest.raises(DomainError):
        v2_number(1, 2, (0, 0), (0, 0))


def test_tau3_values():
    assert tau3(2) == 0
    assert tau3(3) == 15
    assert tau3(4) == 546 == tau3_oracle(4)
    assert tau3_oracle(3) == 15


def test_tau3_nonnegative_integer():
    for d in range(2, 8):
        v = tau3(d)
        assert v >= 0 and v.denominator == 1


def test_component_spec():
    spec = ComponentSpec(2, 2, 0, 1)
    assert spec.n == 3
    assert spec.value() == mpsi(2, 3, 2, 0, 1)
    assert ComponentSpec(1, 2, 2, 2).value() == 0


def test_evaluate_examples():
    assert evaluate(v2((1, *A2)), 3) == 5
    assert evaluate(v3(2), 4) == 2 * 546
    assert evaluate(v1((1, 2, 0, 2)), 2) == 1


def test_s1_rewrite():
    for d in range(2, 6):
        for (a, j), parts in S1_RULES.items():
            assert evaluate(s1((1, a, j)), d) == sum(evaluate(q, d) for q in parts)


def test_combine_linear():
    d = 4
    left = combine(d, v2((3, *A2), (2, *PI)), (-1, v2((1, *SIGMA2))))
    right = 3 * evaluate(v2((1, *A2)), d) + 2 * evaluate(v2((1, *PI)), d) - evaluate(v2((1, *SIGMA2)), d)
    assert left == right


@pytest.mark.parametrize(
    "query",
    [
        v2((1, 1, (0, 0), (0, 0))),
        v1((1, 2, 0, 1)),
        SpaceQuery(Space.V1, (Term(1, 2, ()),)),
        s1((1, 1, 0)),
        SpaceQuery(Space.V2, (Term(1, -1, ((0, 3), (0, 0))),)),
    ],
)
def test_bad_queries(query):
    with pytest.raises(QueryError):
        evaluate(query, 3)


def _collision_strata(d):
    # the special point colliding with one of the constraint points on either component
    points = 3 * d - 4
    total = Fraction(0)
    for d1 in range(1, d):
        d2 = d - d1
        for n1 in range(points):
            n2 = points - 1 - n1
            ways = points * comb(points - 1, n1)
            total += ways * (
                mpsi(d1, n1, 2, 0, 1) * mpsi(d2, n2, 2, 0, 0)
                + mpsi(d1, n1, 2, 0, 0) * mpsi(d2, n2, 2, 0, 1)
            )
    return total


@pytest.mark.parametrize("d", [2, 3, 4, 5, 6])
def test_psi_vs_modified_psi_on_v2(d):
    psi = combine(d, v2((1, *PSI_SIGMA2), (1, *PSI_PI)))
    modified = combine(d, v2((1, *SIGMA2), (1, *PI)))
    assert psi - modified == _collision_strata(d)

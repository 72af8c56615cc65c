import random
from fractions import Fraction
from itertools import permutations, product

import pytest

from g3enum import DomainError, QueryError, RTQuery, kontsevich, load_rt_overrides, rigid0, rt, rt_standard
from g3enum.gw_core import primary_insertions
from g3enum.rt import DIAGONAL, _caterpillar_slots

RT3 = {2: 72, 3: 1800, 4: 157464, 5: 33317856, 6: 13978681056, 7: 10253207097216}


@pytest.mark.parametrize("d", sorted(RT3))
def test_genus_three_table(d):
    assert rt_standard(3, d) == RT3[d]


@pytest.mark.parametrize("d", range(2, 8))
def test_genus_zero_is_kontsevich(d):
    assert rt_standard(0, d) == kontsevich(d)


def _balanced_fixed(d, k, rng):
    while True:
        fixed = tuple(rng.randrange(3) for _ in range(k))
        n = 3 * d + 2 + 2 * (k - 3) - sum(fixed)
        if n >= 0:
            return fixed, n


def test_rigid_invariant_symmetric_in_fixed_points():
    rng = random.Random(3)
    for d in range(1, 4):
        for k in range(3, 7):
            for _ in range(3):
                fixed, n = _balanced_fixed(d, k, rng)
                value = rigid0(d, fixed, n)
                perms = list(set(permutations(fixed)))
                for perm in rng.sample(perms, min(6, len(perms))):
                    assert rigid0(d, perm, n) == value, (d, fixed, perm)
                assert rigid0(d, fixed[::-1], n) == value


def test_fundamental_class_fixed_point_forgets():
    # a fixed point carrying the unit class imposes nothing once the domain stays rigid
    for d in range(1, 4):
        for c2, c3, c4 in product(range(3), repeat=3):
            n = 3 * d + 2 + 2 - (c2 + c3 + c4)
            if n < 0:
                continue
            assert rigid0(d, (0, c2, c3, c4), n) == primary_insertions(d, [c2, c3, c4] + [2] * n)


def test_handle_layout_independence():
    # the three diagonal pairs may be interleaved with the fixed point in any order
    for d in range(1, 5):
        n = 3 * d - 4
        if n < 0:
            continue
        layouts = [
            lambda a, b, c: a + b + c,
            lambda a, b, c: (a[0], b[0], c[0], a[1], b[1], c[1]),
            lambda a, b, c: (a[0], b[0], b[1], c[0], c[1], a[1]),
        ]
        values = set()
        for layout in layouts:
            total = Fraction(0)
            for a, b, c in product(DIAGONAL, repeat=3):
                total += rigid0(d, layout(a, b, c), n)
            values.add(total)
        assert values == {rt_standard(3, d)}


def test_caterpillar_slots_shape():
    slots = _caterpillar_slots((2, 1, 0, 2, 1), (0, 2))
    assert slots == [(2, 1, 0), (2, 0, 2), (0, 2, 1)]


def test_unbalanced_query_is_zero():
    assert rt(RTQuery(3, 3, (), 4)) == 0
    assert rt(RTQuery(1, 2, (2,), 3)) == 0


def test_rigid0_needs_three_points():
    with pytest.raises(DomainError):
        rigid0(2, (2, 2), 4)


@pytest.mark.parametrize("args", [(4, 2), (-1, 2), (3, 0)])
def test_query_validation(args):
    with pytest.raises(QueryError):
        RTQuery(*args)


def test_bad_constraint():
    with pytest.raises(QueryError):
        RTQuery(0, 2, (3, 2, 2), 1)


def test_override_file(tmp_path):
    path = tmp_path / "rt.txt"
    path.write_text("# table\n3 4 157465  # bumped\n3 5 1/2\n")
    table = load_rt_overrides(path)
    assert table == {(3, 4): 157465, (3, 5): Fraction(1, 2)}
    assert rt_standard(3, 4, table) == 157465
    assert rt_standard(3, 3, table) == 1800
    # only the standard query is overridden
    assert rt(RTQuery(3, 4, (2,), 6), table) == rt(RTQuery(3, 4, (2,), 6))


def test_override_file_malformed(tmp_path):
    path = tmp_path / "rt.txt"
    path.write_text("3 4\n")
    with pytest.raises(QueryError):
        load_rt_overrides(path)
    path.write_text("3 x 5\n")
    with pytest.raises(QueryError):
        load_rt_overrides(path)

import itertools
from math import lcm

import pytest
from hypothesis import given, settings, strategies as st

from equivalg.scalar import FieldError, PrimeField
from equivalg.tubular import (GradedAutomorphismDatum, GradingGroup, TYPES, component_dimension_oracle,
                              coordinate_algebra, coordinate_algebra_truncation, epsilon, grading_group,
                              scaling_order, sqrt_minus_one, table1, table1_compatible_pairs,
                              validate_graded_automorphism)

F13 = PrimeField(13)


def brute_order(L, a, limit=100):
    x = L.zero
    for n in range(1, limit + 1):
        x = L.add(x, a)
        if x == L.zero:
            return n
    return 0


@pytest.mark.parametrize("weights,order", [((2, 2, 2, 2), 2), ((3, 3, 3), 3), ((4, 4, 2), 4), ((6, 3, 2), 6)])
def test_dualizing_element_orders(weights, order):
    L = grading_group(weights)
    assert L.order(L.omega) == order
    assert brute_order(L, L.omega) == order


@pytest.mark.parametrize("weights", [(2, 2, 2, 2), (3, 3, 3), (4, 4, 2), (6, 3, 2), (2, 3), (5,)])
def test_grading_group_relations(weights):
    L = grading_group(weights)
    gens = [L.generator(i) for i in range(len(weights))]
    for i, p in enumerate(weights):
        assert L.scale(p, gens[i]) == L.c
    assert L.order(L.c) == 0
    # rank one, torsion of order prod(p) / lcm(p)
    torsion = 1
    for p in weights:
        torsion *= p
    torsion //= lcm(*weights)
    assert list(L.invariants).count(0) == 1
    finite = 1
    for d in L.invariants:
        finite *= d or 1
    assert finite == torsion
    # the torsion elements are the classes of height zero; the box 0 <= a_i < p_i
    # meets each class of L / Zc once
    m = lcm(*weights)
    zero_height = set()
    for v in itertools.product(*(range(p) for p in weights)):
        h = L.height_of(v)
        if h % m == 0:
            # subtract (h / m) c, written as a multiple of p_0 x_0
            w = list(v)
            w[0] -= h // m * weights[0]
            zero_height.add(L.normal_form(w))
    assert len(zero_height) == torsion
    assert all(L.order(x) for x in zero_height)


def test_normal_form_rejects_wrong_length():
    L = GradingGroup((4, 4, 2))
    with pytest.raises(ValueError):
        L.normal_form([1, 2])


def test_two_x1_equals_two_x2():
    L = GradingGroup((2, 2, 2, 2))
    assert L.scale(2, L.generator(0)) == L.scale(2, L.generator(1))
    assert L.generator(0) != L.generator(1)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-12, 12), min_size=3, max_size=3), st.lists(st.integers(-12, 12), min_size=3, max_size=3),
       st.integers(-5, 5), st.integers(-5, 5))
def test_normal_form_properties(a, b, r1, r2):
    L = GradingGroup((4, 4, 2))
    na = L.normal_form(a)
    assert L.canonical(na) == na
    # adding relations does not change the class
    shifted = [x + r1 * p + r2 * q for x, p, q in zip(a, L.relations[0], L.relations[1])]
    assert L.normal_form(shifted) == na
    assert L.add(L.normal_form(a), L.normal_form(b)) == L.normal_form([x + y for x, y in zip(a, b)])
    assert L.sub(na, na) == L.zero
    assert L.height_of(a) == sum(x * h for x, h in zip(a, L.height))


def test_reduction_of_x3_squared():
    S = coordinate_algebra("2,2,2,2", F13, 12)
    assert S.reduce({(0, 0, 2, 0): 1}) == {(0, 2, 0, 0): 1, (2, 0, 0, 0): 12}
    assert S.reduce({(0, 0, 0, 2): 1}) == {(0, 2, 0, 0): 1, (2, 0, 0, 0): 1}


@pytest.mark.parametrize("kind", TYPES)
def test_presentations_are_confluent_and_homogeneous(kind):
    S = coordinate_algebra(kind, F13, 2 if kind == "2,2,2,2" else None)
    assert S.critical_pairs_resolve()
    assert all(S.is_homogeneous(r) for r in S.relations())


def test_degree_c_component_of_333():
    S = coordinate_algebra("3,3,3", F13)
    T = coordinate_algebra_truncation(S, 3)
    assert len(T.component(S.group.c)) == 2
    assert component_dimension_oracle(S, S.group.c, 3) == 2


@pytest.mark.parametrize("kind", TYPES)
def test_component_dimensions_against_linear_algebra(kind):
    S = coordinate_algebra(kind, F13, 3 if kind == "2,2,2,2" else None)
    T = coordinate_algebra_truncation(S, 4)
    for deg, mons in T.components().items():
        assert len(mons) == component_dimension_oracle(S, deg, T.max_height)


def test_bad_parameters():
    with pytest.raises(ValueError):
        coordinate_algebra("2,2,2,2", F13, 1)
    with pytest.raises(ValueError):
        coordinate_algebra("2,2,2,2", F13)
    with pytest.raises(ValueError):
        coordinate_algebra("5,5", F13)


def test_field_constants():
    assert sqrt_minus_one(F13) == 5 and epsilon(F13) == 4
    with pytest.raises(FieldError):
        sqrt_minus_one(PrimeField(7))
    with pytest.raises(FieldError):
        epsilon(PrimeField(5))
    with pytest.raises(FieldError):
        table1(PrimeField(7))


@pytest.fixture(scope="module")
def truncated_table():
    out = {}
    for d in table1(F13):
        T = coordinate_algebra_truncation(d.presentation, 8)
        out[d.name] = (d, T)
    return out


@pytest.mark.parametrize("name", ["g1", "g2", "g3"])
def test_table_automorphisms_validate(truncated_table, name):
    d, T = truncated_table[name]
    assert T.check().ok
    assert validate_graded_automorphism(d, T).ok


@pytest.mark.parametrize("name,order,gamma", [("g1", 2, (12, 1, 1, 1)), ("g2", 3, (5, 5, 5, 5)), ("g3", 2, (1, 1, 3))])
def test_scaling_powers(truncated_table, name, order, gamma):
    d, _ = truncated_table[name]
    m, p = scaling_order(d)
    assert (m, tuple(p.scalars)) == (order, gamma)
    assert d.presentation.group.character_is_well_defined(p.scalars, F13)


def test_expected_scalings_from_constants():
    i, e = sqrt_minus_one(F13), epsilon(F13)
    assert (i * i) % 13 == 12
    assert (e * e) % 13 == 3


def test_g1_needs_the_right_parameter():
    S = coordinate_algebra("2,2,2,2", F13, 2)
    d = GradedAutomorphismDatum("g1", S, (0, 1, 3, 2), (5, 1, 1, 1))
    rep = validate_graded_automorphism(d)
    assert [c.name for c in rep.failures()] == ["relations_preserved"]


def test_non_character_scaling_is_rejected():
    L = GradingGroup((2, 2, 2, 2))
    # x1 -> -x1 and the rest fixed is fine; x1 -> 2 x1 is not, since 4 != 1 on c
    assert L.character_is_well_defined((12, 1, 1, 1), F13)
    assert not L.character_is_well_defined((2, 1, 1, 1), F13)


def test_table_compatible_pairs():
    rep, actions = table1_compatible_pairs(F13)
    assert rep.ok
    assert {k: rep.data[k]["order"] for k in ("g1", "g2", "g3")} == {"g1": 2, "g2": 3, "g3": 2}
    assert [rep.data[k]["window_dim"] for k in ("g1", "g2", "g3")] == [16, 16, 25]
    for name, weak in actions.items():
        assert weak.validate().ok
        assert weak.group.order == rep.data[name]["order"]

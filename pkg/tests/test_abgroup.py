import itertools

import pytest
from hypothesis import given, settings, strategies as st

from equivalg.abgroup import (Cocycle2, FinAbGroup, character_group, evaluation_is_bijective, is_2cocycle,
                              is_coboundary)
from equivalg.scalar import FieldError, PrimeField

F5, F7, F13 = PrimeField(5), PrimeField(7), PrimeField(13)


def brute_force_coboundary(sigma):
    """Every lam: G -> k^* with d(lam) = sigma, by enumeration."""
    G, F = sigma.group, sigma.field
    units = [x for x in F.elements() if x]
    hits = []
    for vals in itertools.product(units, repeat=G.order):
        lam = dict(zip(G.elements, vals))
        if Cocycle2.coboundary(G, lam) == sigma:
            hits.append(lam)
    return hits


def test_group_basics():
    G = FinAbGroup((2, 3))
    assert G.order == 6 and G.exponent == 6
    g = (1, 1)
    assert G.element_order(g) == 6
    assert G.mul(g, G.inv(g)) == G.identity
    assert G.coerce("1,2") == (1, 2)
    assert G.cyclic_generator() is not None
    assert FinAbGroup((2, 2)).cyclic_generator() is None


@pytest.mark.parametrize("orders,p", [((2,), 5), ((4,), 13), ((2, 2), 5), ((3,), 13), ((2, 3), 7)])
def test_character_orthogonality(orders, p):
    G, F = FinAbGroup(orders), PrimeField(p)
    chars = character_group(G, F)
    assert len(chars) == G.order
    assert chars[0].is_trivial()
    for a, b in itertools.product(chars, repeat=2):
        total = sum((a(g) * b(G.inv(g)) for g in G.elements), F.zero)
        assert total == (G.order if a.gen_values == b.gen_values else 0)
    assert evaluation_is_bijective(G, F)


def test_characters_need_a_splitting_field():
    with pytest.raises(FieldError):
        character_group(FinAbGroup((3,)), F5)


@pytest.mark.parametrize("v,trivial", [(1, True), (2, False), (3, False), (4, True)])
def test_c2_cocycle_class_over_f5(v, trivial):
    G = FinAbGroup((2,))
    sigma = Cocycle2.from_triples(G, F5, [((1,), (1,), v)])
    assert is_2cocycle(sigma)
    assert (is_coboundary(sigma) is not None) == trivial
    assert bool(brute_force_coboundary(sigma)) == trivial


def test_alternating_cocycle_on_klein_group_is_nontrivial():
    G = FinAbGroup((2, 2))
    vals = {(g, h): F5(-1) ** (g[0] * h[1]) for g in G.elements for h in G.elements}
    sigma = Cocycle2(G, F5, vals)
    assert is_2cocycle(sigma)
    assert is_coboundary(sigma) is None
    assert brute_force_coboundary(sigma) == []


def test_non_cocycle_detected():
    G = FinAbGroup((3,))
    sigma = Cocycle2.from_triples(G, F7, [((1,), (1,), 2)])
    assert not is_2cocycle(sigma)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(1, 12), min_size=4, max_size=4))
def test_coboundaries_are_cocycles_and_detected(vals):
    G = FinAbGroup((2, 2))
    lam = {g: F13(v) for g, v in zip(G.elements, vals)}
    sigma = Cocycle2.coboundary(G, lam)
    assert is_2cocycle(sigma)
    w = is_coboundary(sigma)
    assert w is not None and Cocycle2.coboundary(G, w) == sigma


def test_is_coboundary_witness_is_canonical():
    G = FinAbGroup((3,))
    lam = {g: F7(v) for g, v in zip(G.elements, [1, 3, 5])}
    sigma = Cocycle2.coboundary(G, lam)
    assert is_coboundary(sigma) == is_coboundary(sigma)
    assert is_coboundary(sigma)[G.identity] == 1

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from equivalg.action import (AlgebraMap, CompatiblePair, CrossedProduct, ModuleCategoryAction, WeakAction,
                             alpha_change_witness, coherence_suite, compatible_pair_from_action,
                             crossed_system_from_stable_module, crossed_systems_equivalent, cyclic_round_trip,
                             find_crossed_equivalence, induced_cyclic_action, is_d_compatible,
                             root_hypotheses, stable_isomorphisms, weak_action_k0)
from equivalg.algebra import ModuleRep, truncated_polynomial_algebra
from equivalg.decompose import BlockData
from equivalg.instances import permutation_map, scaling_automorphism, swap_action, twisted_c2_action
from equivalg.scalar import Matrix, PrimeField


@pytest.mark.parametrize("name", ["swap_c2", "twisted_c2", "shift_c3", "trivial_kc2"])
def test_bundled_actions_valid(actions, probes, name):
    act = actions[name]
    assert act.weak.validate().ok
    assert coherence_suite(act, probes[name], max_n=3).ok


def test_broken_cocycle_is_rejected():
    w = twisted_c2_action(5, 2)
    c = dict(w.c)
    c[((0,), (1,))] = w.algebra.scalar(3)
    broken = WeakAction(w.group, w.algebra, w.rho, c)
    rep = broken.validate()
    assert not rep.ok
    assert "c_twisted_cocycle" in [ch.name for ch in rep.failures()]
    act = ModuleCategoryAction(broken)
    assert not coherence_suite(act, act.default_probes(), max_n=3).ok


def test_weak_action_json_round_trip(actions):
    for act in actions.values():
        w = act.weak
        w2 = WeakAction.from_json(w.to_json())
        assert w2.to_json() == w.to_json()


@pytest.mark.parametrize("name,center", [("swap_c2", 1), ("twisted_c2", 2), ("shift_c3", 1), ("trivial_kc2", 4)])
def test_crossed_product_structure(actions, name, center):
    w = actions[name].weak
    cp = CrossedProduct(w)
    assert cp.verify().ok
    assert cp.dim == w.algebra.dim * w.group.order
    assert len(cp.algebra.center()) == center


def brute_force_center_size(B):
    F = B.field
    elems = [Matrix.column(F, v) for v in itertools.product(range(F.p), repeat=B.dim)]
    return sum(1 for z in elems if all(B.mul(z, b) == B.mul(b, z) for b in B.basis))


def test_swap_crossed_product_center_by_enumeration():
    B = CrossedProduct(swap_action(5)).algebra
    assert brute_force_center_size(B) == 5 ** len(B.center()) == 5


def test_twisted_unit_is_inverse_of_c_ee():
    w = twisted_c2_action(5, 2)
    c = dict(w.c)
    e = w.group.identity
    # rescale c by a constant 3: still a valid system, with c(e,e) = 3
    c = {k: v * 3 for k, v in c.items()}
    w3 = WeakAction(w.group, w.algebra, w.rho, c)
    assert w3.validate().ok
    cp = CrossedProduct(w3)
    assert cp.verify().ok
    assert cp.algebra.unit == cp.element(w.algebra.scalar(2), e)


units_f13 = st.tuples(st.integers(1, 12), st.integers(1, 12))


@settings(max_examples=25, deadline=None)
@given(st.lists(units_f13, min_size=2, max_size=2))
def test_gauge_transformed_system_is_valid_and_equivalent(vals):
    w = swap_action(13)
    A, G = w.algebra, w.group
    delta = {g: Matrix.column(A.field, list(v)) for g, v in zip(G.elements, vals)}
    rho2 = {g: AlgebraMap.conjugation(A, A.inverse(delta[g])) @ w.rho[g] for g in G.elements}
    c2 = {(g, h): A.prod(A.inverse(delta[g]), A.inverse(w.rho[g](delta[h])), w.c[(g, h)], delta[G.mul(g, h)])
          for g in G.elements for h in G.elements}
    w2 = WeakAction(G, A, rho2, c2)
    assert w2.validate().ok
    assert crossed_systems_equivalent(w, w2, AlgebraMap.identity(A), delta)
    assert len(CrossedProduct(w2).algebra.center()) == 1


def test_exhaustive_equivalence_search():
    w = swap_action(3)
    A = w.algebra
    s = permutation_map(A, [1, 0])
    assert find_crossed_equivalence(w, w.pushforward(s)) is not None
    trivial = WeakAction.trivial(w.group, A)
    assert find_crossed_equivalence(w, trivial) is None


@pytest.mark.parametrize("name", ["swap_c2", "twisted_c2", "shift_c3", "trivial_kc2"])
def test_compatible_pair_round_trip(actions, probes, name):
    act = actions[name]
    pair, rep = compatible_pair_from_action(act, probes=probes[name])
    assert rep.ok and pair.validate().ok
    induced = induced_cyclic_action(pair)
    assert induced.validate().ok
    assert cyclic_round_trip(act, pair, act.group.cyclic_generator(), probes[name])


def test_twisted_pair_carries_the_cocycle_value(actions, probes):
    pair, _ = compatible_pair_from_action(actions["twisted_c2"], probes=probes["twisted_c2"])
    assert pair.a.to_ints() == [[2]]


def test_incompatible_pair_is_refused():
    A = truncated_polynomial_algebra(PrimeField(13), 2)
    pair = CompatiblePair(scaling_automorphism(13, 5), A.unit, 2)
    assert not pair.validate().ok
    with pytest.raises(ValueError):
        induced_cyclic_action(pair)


@pytest.mark.parametrize("lam,d,ok", [(1, 2, True), (12, 2, True), (5, 2, False), (5, 4, True), (3, 3, True)])
def test_d_compatibility_of_scalings(lam, d, ok):
    # on the commutative k[x]/(x^2) conjugations are trivial, so lam^d = 1 decides
    F = PrimeField(13)
    A = truncated_polynomial_algebra(F, 2)
    w = is_d_compatible(A, scaling_automorphism(13, lam), d)
    assert (w is not None) == ok
    assert ok == (pow(lam, d, 13) == 1)


def test_k0_permutations(actions):
    swap = weak_action_k0(actions["swap_c2"].weak)
    assert [m.to_ints() for m in swap.values()] == [[[0, 1], [1, 0]]]
    triv = weak_action_k0(actions["trivial_kc2"].weak)
    assert [m.to_ints() for m in triv.values()] == [[[1, 0], [0, 1]]]
    shift = weak_action_k0(actions["shift_c3"].weak)
    (m,) = shift.values()
    assert m.to_ints() in ([[0, 0, 1], [1, 0, 0], [0, 1, 0]], [[0, 1, 0], [0, 0, 1], [1, 0, 0]])


def test_crossed_system_from_regular_module(actions):
    act = actions["swap_c2"]
    T = ModuleRep.regular(act.algebra)
    alpha = stable_isomorphisms(act, T)
    w, basis = crossed_system_from_stable_module(act, T, alpha)
    assert w.validate().ok
    assert len(basis) == 2
    # rescaling alpha gives an equivalent system
    alpha2 = {g: a * 3 for g, a in alpha.items()}
    assert alpha_change_witness(act, T, alpha, alpha2) is not None


def test_unstable_module_has_no_alpha(actions):
    act = actions["swap_c2"]
    S1 = BlockData(act.algebra).simples[0]
    assert stable_isomorphisms(act, S1) is None


@pytest.mark.parametrize("p,d,every,primitive", [(13, 1, True, True), (13, 2, False, True), (13, 5, True, False),
                                                 (5, 4, False, True), (7, 3, False, True), (7, 5, True, False)])
def test_root_hypotheses_over_prime_fields(p, d, every, primitive):
    data = root_hypotheses(PrimeField(p), d).data
    assert data["every_element_has_dth_root"] == every
    assert data["has_primitive_dth_roots"] == primitive
    assert data["uniqueness_conditional"] == (not (every and primitive))
    # over F_p both hold only for d = 1
    assert (every and primitive) == (d == 1)

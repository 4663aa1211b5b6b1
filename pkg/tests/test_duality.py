import pytest

from equivalg.action import ModuleCategoryAction
from equivalg.algebra import direct_sum
from equivalg.decompose import BlockData
from equivalg.duality import (DualAction, can, central_twist_data, end_ind_check, identity_functor_data,
                              is_basic, monad_isomorphism, orbit_census, stable_bijection_iota, theta,
                              verify_central_twist, verify_character_functor_identity,
                              verify_equivariantized_functor, verify_monad_isomorphism,
                              verify_theta_equivalence)
from equivalg.equivariant import EquivariantModule, equivariant_probes, hom_equivariant
from equivalg.instances import swap_action
from equivalg.scalar import Matrix

NAMES = ["swap_c2", "twisted_c2", "shift_c3", "trivial_kc2"]


@pytest.fixture(scope="module")
def duals(actions):
    return {name: DualAction(act) for name, act in actions.items()}


def swap_object(act):
    S1, S2 = BlockData(act.algebra).simples
    X = direct_sum([S1, S2])
    e, s = act.group.elements
    return EquivariantModule(act, X, {e: Matrix.identity(X.field, 2),
                                      s: Matrix.from_entries(X.field, [[0, 1], [1, 0]])})


@pytest.mark.parametrize("name", NAMES)
def test_dual_action_is_strict(duals, actions, name):
    dual = duals[name]
    assert dual.weak.validate().ok
    assert dual.check_strictness(equivariant_probes(actions[name]))


def test_can_on_a_simple(duals, actions):
    dual = duals["swap_c2"]
    act = actions["swap_c2"]
    S1 = BlockData(act.algebra).simples[0]
    e, s = act.group.elements
    F = act.field
    for psi, chi in zip(dual.dual_group.elements, dual.characters):
        assert can(dual, S1)[psi] == Matrix.from_entries(F, [[1, 0], [0, int(chi(s))]])
    assert theta(dual, S1).validate().ok


@pytest.mark.parametrize("name", NAMES)
def test_theta_on_default_probes(duals, probes, name):
    rep = verify_theta_equivalence(duals[name], probes[name])
    assert rep.ok, rep.failures()


def test_density_fails_on_a_narrow_probe_family(duals, actions):
    act = actions["swap_c2"]
    S1 = BlockData(act.algebra).simples[0]
    rep = verify_theta_equivalence(duals["swap_c2"], [S1])
    assert [c.name for c in rep.failures()] == ["dense_relative_to_probes"]


@pytest.mark.parametrize("name", NAMES)
def test_monad_isomorphism(duals, actions, name):
    eqs = equivariant_probes(actions[name])
    assert verify_monad_isomorphism(duals[name], eqs).ok


def test_monad_isomorphism_on_the_swap_object():
    act = ModuleCategoryAction(swap_action(13))
    dual = DualAction(act)
    E = swap_object(act)
    f, finv = monad_isomorphism(dual, E)
    assert f.shape == (4, 4)
    assert f.inverse() == finv


def test_character_functors_are_dual_twists(duals, actions):
    for name, dual in duals.items():
        assert verify_character_functor_identity(dual, equivariant_probes(actions[name]))


def test_character_twist_of_swap_object_is_isomorphic():
    act = ModuleCategoryAction(swap_action(13))
    dual = DualAction(act)
    E = swap_object(act)
    sign = dual.dual_group.elements[1]
    T = dual.twist(sign, E)
    assert T.validate().ok
    assert T.alpha[act.group.elements[1]] == E.alpha[act.group.elements[1]] * act.field(-1)
    # diag(1, -1) intertwines the swap with its negative: the object is dual-stable
    (f,) = hom_equivariant(E, T)
    assert f.is_invertible()
    assert f == Matrix.from_entries(act.field, [[1, 0], [0, -1]])


def test_character_twists_on_trivial_action_are_not_isomorphic(duals, actions):
    act = actions["trivial_kc2"]
    dual = duals["trivial_kc2"]
    sign = dual.dual_group.elements[1]
    for E in equivariant_probes(act, BlockData(act.algebra).simples):
        if E.dim == 1:
            assert hom_equivariant(E, dual.twist(sign, E)) == []


@pytest.mark.parametrize("name", ["twisted_c2", "shift_c3"])
def test_central_twist_lifts_to_identity(actions, probes, name):
    act = actions[name]
    eqs = equivariant_probes(act, probes[name])
    for a in act.group.elements:
        assert verify_central_twist(act, a, probes[name], eqs).ok


@pytest.mark.parametrize("name", NAMES)
def test_equivariantized_functors(duals, actions, probes, name):
    act = actions[name]
    dual = duals[name]
    eqs = equivariant_probes(act, probes[name])
    for a in act.group.elements:
        assert verify_equivariantized_functor(dual, central_twist_data(act, a), probes[name], eqs).ok
    chi = dual.characters[-1]
    fd = identity_functor_data(act, {g: chi(g) for g in act.group.elements})
    assert verify_equivariantized_functor(dual, fd, probes[name], eqs).ok


def test_orbit_census_swap(duals, actions):
    act = actions["swap_c2"]
    rep = orbit_census(duals["swap_c2"], BlockData(act.algebra).simples)
    assert rep.ok
    assert (rep.data["C_over_G"], rep.data["CG_over_dual"]) == (1, 1)


def test_orbit_census_trivial_group_algebra(duals, actions):
    act = actions["trivial_kc2"]
    rep = orbit_census(duals["trivial_kc2"], BlockData(act.algebra).simples)
    assert rep.ok
    assert (rep.data["C_over_G"], rep.data["CG_over_dual"]) == (2, 2)


def test_iota_of_swap_sum():
    act = ModuleCategoryAction(swap_action(13))
    dual = DualAction(act)
    S1, S2 = BlockData(act.algebra).simples
    M = direct_sum([S1, S2])
    assert is_basic(M)
    iota, rep = stable_bijection_iota(dual, M)
    assert rep.ok
    assert iota.dim == 2
    assert rep.data["ind_summands"] == 2 and rep.data["distinct"] == 1
    with pytest.raises(ValueError):
        stable_bijection_iota(dual, S1)
    with pytest.raises(ValueError):
        stable_bijection_iota(dual, direct_sum([M, M]))


def test_end_of_induction_is_crossed_product():
    act = ModuleCategoryAction(swap_action(13))
    S1, S2 = BlockData(act.algebra).simples
    rep = end_ind_check(act, direct_sum([S1, S2]))
    assert rep.ok
    assert rep.checks[1].detail == {"end_ind": 4, "crossed": 4}

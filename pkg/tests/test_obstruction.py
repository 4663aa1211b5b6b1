import json

import pytest
from hypothesis import given, settings, strategies as st

from equivalg.abgroup import Cocycle2, is_2cocycle
from equivalg.action import ModuleCategoryAction, WeakAction
from equivalg.algebra import AlgebraMap
from equivalg.corpus import resolve
from equivalg.duality import central_twist_data
from equivalg.instances import permutation_map, swap_action
from equivalg.obstruction import (CommutingFunctorDatum, ObstructionUndefined, character_functor,
                                  exhaustive_coboundary_search, kernel_check, multiplicativity_check,
                                  obstruction_class, obstruction_cocycle, obstruction_report)
from equivalg.scalar import Matrix


def load_datum(name):
    obj = json.loads(resolve(name).read_text())
    act = WeakAction.from_json(obj["action"]).module_action()
    return act, CommutingFunctorDatum.from_json(act, obj)


@pytest.fixture(scope="module")
def proj_comm():
    return load_datum("proj_comm_f5.json")


def test_projective_commutation_cocycle(proj_comm):
    act, datum = proj_comm
    sigma = obstruction_cocycle(datum, act.default_probes())
    e, s = act.group.elements
    assert is_2cocycle(sigma)
    assert int(sigma(s, s)) == 3
    assert all(int(sigma(*k)) == 1 for k in [(e, e), (e, s), (s, e)])


def test_projective_commutation_class_is_nontrivial(proj_comm):
    act, datum = proj_comm
    sigma = obstruction_cocycle(datum, act.default_probes())
    assert obstruction_class(datum, act.default_probes()) == ("nontrivial class", None)
    count, found = exhaustive_coboundary_search(sigma)
    assert (count, found) == (16, [])
    # on C2 a normalized class is trivial iff sigma(s, s) is a square
    e, s = act.group.elements
    assert int(sigma(s, s)) not in {x * x % 5 for x in range(1, 5)}


def test_report_on_projective_commutation(proj_comm):
    act, datum = proj_comm
    rep = obstruction_report(datum, act.default_probes(), seed=3)
    assert rep.ok
    assert rep.data["class"] == "nontrivial class"
    assert rep.data["center_is_k"] is False


@pytest.mark.parametrize("name", ["twisted_c2", "shift_c3", "swap_c2"])
def test_central_twists_have_trivial_class(actions, probes, name):
    act = actions[name]
    for a in act.group.elements:
        fd = central_twist_data(act, a)
        datum = CommutingFunctorDatum(act, fd.tau, fd.delta)
        sigma = obstruction_cocycle(datum, probes[name])
        assert all(int(v) == 1 for v in sigma.values.values())
        verdict, lift = obstruction_class(datum, probes[name])
        assert verdict == "trivial"
        assert lift.validate(probes[name]).ok


def test_bundled_central_twist_file_lifts():
    act, datum = load_datum("central_twist_f5.json")
    rep = obstruction_report(datum, act.default_probes())
    assert rep.ok and rep.data["class"] == "trivial"
    assert rep.data["center_is_k"] is True


@pytest.mark.parametrize("lam", [2, 3, 4])
def test_scalar_identity_datum_is_a_coboundary(actions, probes, lam):
    act = actions["twisted_c2"]
    A = act.algebra
    e, s = act.group.elements
    datum = CommutingFunctorDatum(act, AlgebraMap.identity(A), {e: A.unit, s: A.scalar(lam)})
    sigma = obstruction_cocycle(datum, probes["twisted_c2"])
    count, found = exhaustive_coboundary_search(sigma)
    assert count == 16 and found
    assert obstruction_class(datum, probes["twisted_c2"])[0] == "trivial"


units_f5 = st.integers(1, 4)


@settings(max_examples=30, deadline=None)
@given(st.tuples(units_f5, units_f5), st.tuples(units_f5, units_f5))
def test_gauge_covariance(delta_s, lam):
    w = swap_action(5)
    act = ModuleCategoryAction(w)
    A, G = w.algebra, w.group
    e, s = G.elements
    datum = CommutingFunctorDatum(act, permutation_map(A, [1, 0]),
                                  {e: A.unit, s: Matrix.column(A.field, list(delta_s))})
    probes = act.default_probes()
    sigma = obstruction_cocycle(datum, probes)
    scal = {e: A.field(lam[0]), s: A.field(lam[1])}
    sigma2 = obstruction_cocycle(datum.rescaled(scal), probes)
    assert is_2cocycle(sigma)
    assert sigma2 == sigma * Cocycle2.coboundary(G, scal)


def test_non_scalar_ratio_is_refused():
    w = swap_action(5)
    A, G = w.algebra, w.group
    act = ModuleCategoryAction(WeakAction.trivial(G, A))
    e, s = G.elements
    datum = CommutingFunctorDatum(act, AlgebraMap.identity(A), {e: A.unit, s: Matrix.column(A.field, [1, 2])})
    with pytest.raises(ObstructionUndefined):
        obstruction_cocycle(datum, act.default_probes())


def test_non_invertible_delta_is_refused(actions):
    act = actions["swap_c2"]
    A = act.algebra
    e, s = act.group.elements
    datum = CommutingFunctorDatum(act, AlgebraMap.identity(A), {e: A.unit, s: Matrix.column(A.field, [1, 0])})
    with pytest.raises(ValueError):
        obstruction_cocycle(datum, act.default_probes())


def test_multiplicativity(proj_comm, actions, probes):
    act, datum = proj_comm
    assert multiplicativity_check(datum, datum, act.default_probes())
    tw = actions["twisted_c2"]
    fd = central_twist_data(tw, tw.group.elements[1])
    d1 = CommutingFunctorDatum(tw, fd.tau, fd.delta)
    d2 = character_functor(tw, 1)
    assert multiplicativity_check(d1, d2, probes["twisted_c2"])


def test_kernel_on_a_central_action(actions):
    act = actions["twisted_c2"]
    A = act.algebra
    e, s = act.group.elements
    rep = kernel_check(act, [{e: A.unit, s: A.scalar(4)}])
    assert rep.ok
    assert rep.checks[-1].detail == {"matches": [1]}


def test_kernel_on_trivial_group_algebra(actions):
    assert kernel_check(actions["trivial_kc2"]).ok


def test_kernel_collapses_when_center_is_larger(actions):
    # the central unit (1, -1) identifies the two character functors for the swap
    rep = kernel_check(actions["swap_c2"])
    assert [c.name for c in rep.failures()] == ["characters_pairwise_non_isomorphic"]
    assert rep.failures()[0].detail == {"isomorphic_pairs": [[0, 1]]}


def test_datum_json_round_trip(proj_comm):
    act, datum = proj_comm
    again = CommutingFunctorDatum.from_json(act, datum.to_json())
    assert again.to_json() == datum.to_json()


def test_kernel_of_trivial_group():
    from equivalg.abgroup import FinAbGroup
    w = swap_action(5)
    act = ModuleCategoryAction(WeakAction.trivial(FinAbGroup([1]), w.algebra))
    rep = kernel_check(act)
    assert rep.ok and rep.data["characters"] == 1

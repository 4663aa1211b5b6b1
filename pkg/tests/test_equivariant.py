import itertools

import pytest

from equivalg.action import CrossedProduct, ModuleCategoryAction
from equivalg.algebra import ModuleRep, direct_sum, hom_space
from equivalg.decompose import BlockData
from equivalg.equivariant import (EquivariantModule, comparison_module, counit_eps, end_ind_dimension_law,
                                  equivariant_probes, from_crossed_module, hom_equivariant,
                                  hom_equivariant_by_equations, induction, is_M_module, monad_M, to_crossed_module,
                                  verify_adjunctions, verify_monad_laws)
from equivalg.instances import swap_action
from equivalg.scalar import Matrix


def swap_setup(p):
    act = ModuleCategoryAction(swap_action(p))
    S1, S2 = BlockData(act.algebra).simples
    X = direct_sum([S1, S2])
    return act, S1, S2, X


def swap_matrix(F):
    return Matrix.from_entries(F, [[0, 1], [1, 0]])


def enumerate_equivariant_endomorphisms(E):
    F = E.field
    n = E.dim
    gens = [E.module.act(b) for b in E.action.algebra.basis] + list(E.alpha.values())
    count = 0
    for entries in itertools.product(range(F.p), repeat=n * n):
        f = Matrix.from_entries(F, [list(entries[r * n:(r + 1) * n]) for r in range(n)])
        count += all(m @ f == f @ m for m in gens)
    return count


def test_swap_on_sum_of_simples_is_equivariant():
    act, S1, S2, X = swap_setup(5)
    e, s = act.group.elements
    E = EquivariantModule(act, X, {e: Matrix.identity(X.field, 2), s: swap_matrix(X.field)})
    assert E.validate().ok
    # End_A(S1 + S2) = k x k and the swap fixes only the scalars
    assert len(hom_space(X, X)) == 2
    assert len(hom_equivariant(E, E)) == 1
    assert enumerate_equivariant_endomorphisms(E) == 5 ** 1


def test_sign_twisted_swap_breaks_the_relation():
    act, S1, S2, X = swap_setup(5)
    F = X.field
    e, s = act.group.elements
    alpha = swap_matrix(F) @ Matrix.from_entries(F, [[1, 0], [0, -1]])
    # alpha_s composed with itself is -1, not the identity
    assert alpha @ alpha == Matrix.identity(F, 2) * F(-1)
    E = EquivariantModule(act, X, {e: Matrix.identity(F, 2), s: alpha})
    rep = E.validate()
    assert not rep.ok
    assert [c.name for c in rep.failures()] == ["relations"]


def test_equivariant_json_round_trip(actions):
    for act in actions.values():
        for E in equivariant_probes(act):
            assert EquivariantModule.from_json(act, E.to_json()) == E


@pytest.mark.parametrize("name", ["swap_c2", "twisted_c2", "shift_c3", "trivial_kc2"])
def test_crossed_module_round_trip(actions, name):
    act = actions[name]
    cp = CrossedProduct(act.weak)
    probes = equivariant_probes(act)
    for E in probes:
        assert E.validate().ok
        Y = to_crossed_module(E, cp)
        assert Y.validate().ok
        assert from_crossed_module(act, Y, cp) == E
    for E1, E2 in itertools.product(probes, repeat=2):
        lhs = len(hom_equivariant(E1, E2))
        assert lhs == len(hom_equivariant_by_equations(E1, E2))
        assert lhs == len(hom_space(to_crossed_module(E1, cp), to_crossed_module(E2, cp)))


def test_swap_simple_equivariant_object_is_two_dimensional():
    act, S1, S2, X = swap_setup(13)
    cp = CrossedProduct(act.weak)
    (S,) = BlockData(cp.algebra).simples
    E = from_crossed_module(act, S, cp)
    assert E.dim == 2
    assert len(hom_equivariant(E, E)) == 1


def test_induction_of_a_simple():
    act, S1, S2, X = swap_setup(13)
    I = induction(act, S1)
    assert I.validate().ok
    assert I.module == direct_sum([act.F(g)(S1) for g in act.group.elements])
    assert I.dim == 2


@pytest.mark.parametrize("name", ["swap_c2", "twisted_c2", "shift_c3", "trivial_kc2"])
def test_adjunctions_and_monads(actions, probes, name):
    act = actions[name]
    mods = probes[name]
    eqs = equivariant_probes(act, mods)
    assert verify_adjunctions(act, mods, eqs).ok
    assert verify_monad_laws(act, mods, eqs).ok


def test_comparison_gives_monad_modules(actions, probes):
    act = actions["shift_c3"]
    for E in equivariant_probes(act, probes["shift_c3"]):
        assert is_M_module(act, E.module, comparison_module(E))


def test_monad_of_simple_is_sum_of_twists():
    act, S1, S2, X = swap_setup(13)
    assert monad_M(act, S1) == direct_sum([S1, act.F(act.group.elements[1])(S1)])


def test_end_of_induction_counts_twisted_homs(actions, probes):
    for name, act in actions.items():
        for M in probes[name]:
            lhs, rhs = end_ind_dimension_law(act, M)
            assert lhs == rhs


def test_counit_is_split_by_averaging(actions):
    act = actions["swap_c2"]
    for E in equivariant_probes(act):
        eps = counit_eps(E)
        assert eps.nrows == E.dim and eps.ncols == E.dim * act.group.order


def test_order_divisible_by_characteristic_is_refused():
    from equivalg.abgroup import FinAbGroup
    from equivalg.action import WeakAction
    from equivalg.algebra import matrix_algebra
    from equivalg.scalar import PrimeField
    A = matrix_algebra(PrimeField(2), 1)
    act = ModuleCategoryAction(WeakAction.trivial(FinAbGroup([2]), A))
    E = induction(act, ModuleRep.regular(A))
    with pytest.raises(ValueError):
        hom_equivariant(E, E)
    # the equation route still works: Ind(k) is the regular kC2-module, End = kC2
    assert len(hom_equivariant_by_equations(E, E)) == 2

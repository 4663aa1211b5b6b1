"""One test per acceptance criterion, at exact equality.

The terminal summary prints a PASS/FAIL line for each criterion.
"""
import itertools
import json
import time

from equivalg.abgroup import Cocycle2, is_2cocycle
from equivalg.action import CrossedProduct, ModuleCategoryAction, WeakAction, coherence_suite, weak_action_k0
from equivalg.algebra import direct_sum, hom_space
from equivalg.corpus import resolve
from equivalg.decompose import BlockData
from equivalg.duality import (DualAction, central_twist_data, end_ind_check, monad_isomorphism, orbit_census,
                              verify_monad_isomorphism, verify_theta_equivalence)
from equivalg.equivariant import (equivariant_probes, from_crossed_module, hom_equivariant, to_crossed_module,
                                  verify_adjunctions, verify_monad_laws)
from equivalg.instances import BUNDLED, cyclic_shift_action, swap_action, trivial_group_algebra_action, \
    twisted_c2_action
from equivalg.obstruction import (CommutingFunctorDatum, exhaustive_coboundary_search, obstruction_class,
                                  obstruction_cocycle)
from equivalg.scalar import Matrix
from equivalg.tubular import default_field, epsilon, scaling_order, sqrt_minus_one, table1, table1_compatible_pairs

SUITE_ACTIONS = {
    "swap_c2": lambda: swap_action(13),
    "twisted_c2": lambda: twisted_c2_action(5, 2),
    "shift_c3": lambda: cyclic_shift_action(13, 3),
}


def criterion(number):
    def tag(fn):
        fn.criterion = number
        return fn
    return tag


@criterion(1)
def test_coherence_identities():
    """coherence identities on the three suite actions, words up to length 4, under 10 s"""
    start = time.perf_counter()
    for name, make in SUITE_ACTIONS.items():
        act = ModuleCategoryAction(make())
        rep = coherence_suite(act, act.default_probes(), max_n=4)
        assert rep.ok, (name, rep.failures())
        names = {c.name for c in rep.checks}
        assert {"unit_middle", "left_unit", "right_unit", "bracketing_independence",
                "power_splitting", "power_wraparound"} <= names
    assert time.perf_counter() - start < 10


def pair_product(weak, x, y):
    """``(r1 g)(r2 h) = r1 rho(g)(r2) c(g, h) gh`` on pairs, bypassing structure constants."""
    (r1, g), (r2, h) = x, y
    A, G = weak.algebra, weak.group
    return A.prod(r1, weak.rho[g](r2), weak.c[(g, h)]), G.mul(g, h)


@criterion(2)
def test_crossed_products():
    """crossed product dimension, associativity on basis triples, unit; swap has centre 1 and a 2-dim simple"""
    for name, make in BUNDLED.items():
        w = make()
        start = time.perf_counter()
        cp = CrossedProduct(w)
        rep = cp.verify()
        elapsed = time.perf_counter() - start
        assert rep.ok and elapsed < 1, name
        A, G = w.algebra, w.group
        assert cp.dim == A.dim * G.order
        e = G.identity
        assert cp.algebra.unit == cp.element(A.inverse(w.c[(e, e)]), e)
        basis = [(A.basis_element(i), g) for g in G.elements for i in range(A.dim)]
        for x, y, z in itertools.product(basis, repeat=3):
            assert pair_product(w, pair_product(w, x, y), z) == pair_product(w, x, pair_product(w, y, z))
        for (i, x), (j, y) in itertools.product(enumerate(basis), repeat=2):
            assert cp.algebra.products[i][j] == cp.element(*pair_product(w, x, y))
    B = CrossedProduct(swap_action(13)).algebra
    assert len(B.center()) == 1
    assert sorted(S.dim for S in BlockData(B).simples) == [2]


@criterion(3)
def test_crossed_module_realization(actions):
    """equivariant objects and crossed-product modules round-trip with equal hom dimensions"""
    for name, act in actions.items():
        cp = CrossedProduct(act.weak)
        eqs = equivariant_probes(act)
        lifted = [to_crossed_module(E, cp) for E in eqs]
        assert all(from_crossed_module(act, Y, cp) == E for E, Y in zip(eqs, lifted)), name
        for (E1, Y1), (E2, Y2) in itertools.product(zip(eqs, lifted), repeat=2):
            assert len(hom_equivariant(E1, E2)) == len(hom_space(Y1, Y2)), name


@criterion(4)
def test_monad_machinery(actions, probes):
    """adjunction bijections, triangle identities, split counit, monad laws, monad isomorphism inverse"""
    for name, act in actions.items():
        eqs = equivariant_probes(act, probes[name])
        assert verify_adjunctions(act, probes[name], eqs).ok, name
        assert verify_monad_laws(act, probes[name], eqs).ok, name
        dual = DualAction(act)
        assert verify_monad_isomorphism(dual, eqs).ok, name
        for E in eqs:
            f, finv = monad_isomorphism(dual, E)
            ident = Matrix.identity(E.field, f.nrows)
            assert f @ finv == ident and finv @ f == ident


@criterion(5)
def test_duality_on_probes(actions, probes):
    """the duality functor preserves hom dimensions, its structure maps satisfy the identity, dense on probes"""
    for name, act in actions.items():
        rep = verify_theta_equivalence(DualAction(act), probes[name])
        assert rep.ok, (name, rep.failures())
        assert all(a == b for a, b in rep.checks[1].detail["hom_dims"])


@criterion(6)
def test_orbit_counts_and_end_of_induction(actions):
    """orbit counts 1 = 1 (swap) and 2 = 2 (trivial on kC2), End(Ind M) = End(M) * G for M = S1 + S2"""
    swap = actions["swap_c2"]
    rep = orbit_census(DualAction(swap), BlockData(swap.algebra).simples)
    assert rep.ok and (rep.data["C_over_G"], rep.data["CG_over_dual"]) == (1, 1)
    triv = ModuleCategoryAction(trivial_group_algebra_action(5))
    rep = orbit_census(DualAction(triv), BlockData(triv.algebra).simples)
    assert rep.ok and (rep.data["C_over_G"], rep.data["CG_over_dual"]) == (2, 2)
    rep = end_ind_check(swap, direct_sum(BlockData(swap.algebra).simples))
    assert rep.ok
    assert rep.checks[1].detail == {"end_ind": 4, "crossed": 4}


@criterion(7)
def test_obstruction_cocycle():
    """obstruction is a 2-cocycle, gauge covariant; the central twist lifts; the F_5 case is nontrivial (0 of 16)"""
    twisted = ModuleCategoryAction(twisted_c2_action(5, 2))
    probes = twisted.default_probes()
    G, F = twisted.group, twisted.field
    for a in G.elements:
        fd = central_twist_data(twisted, a)
        datum = CommutingFunctorDatum(twisted, fd.tau, fd.delta)
        sigma = obstruction_cocycle(datum, probes)
        assert is_2cocycle(sigma)
        for lam_vals in itertools.product(range(1, 5), repeat=G.order):
            lam = {g: F(v) for g, v in zip(G.elements, lam_vals)}
            assert obstruction_cocycle(datum.rescaled(lam), probes) == sigma * Cocycle2.coboundary(G, lam)
        verdict, lift = obstruction_class(datum, probes)
        assert verdict == "trivial" and lift.validate(probes).ok
    obj = json.loads(resolve("proj_comm_f5.json").read_text())
    act = WeakAction.from_json(obj["action"]).module_action()
    datum = CommutingFunctorDatum.from_json(act, obj)
    probes = act.default_probes()
    sigma = obstruction_cocycle(datum, probes)
    assert is_2cocycle(sigma)
    assert obstruction_class(datum, probes) == ("nontrivial class", None)
    assert exhaustive_coboundary_search(sigma) == (16, [])


@criterion(8)
def test_table_of_graded_automorphisms():
    """g1, g2, g3 validate through 8 steps with scaling powers (-1,1,1,1), sqrt(-1), (1,1,eps^2), under 30 s"""
    start = time.perf_counter()
    F = default_field()
    rep, weak_actions = table1_compatible_pairs(F)
    assert rep.ok, rep.failures()
    i, e = sqrt_minus_one(F), epsilon(F)
    minus_one = F.neg(F.one_raw)
    expected = {"g1": (2, (minus_one, 1, 1, 1)), "g2": (3, (i, i, i, i)), "g3": (2, (1, 1, F.mul(e, e)))}
    for d in table1(F):
        m, p = scaling_order(d)
        assert (m, tuple(p.scalars)) == expected[d.name]
        assert d.presentation.group.character_is_well_defined(p.scalars, F)
        assert weak_actions[d.name].validate().ok
        assert weak_actions[d.name].group.order == m
    assert time.perf_counter() - start < 30


@criterion(9)
def test_k0_permutations():
    """K0 permutation is the transposition for the swap and the identity for the trivial action"""
    (swap,) = weak_action_k0(swap_action(13)).values()
    assert swap.to_ints() == [[0, 1], [1, 0]]
    (triv,) = weak_action_k0(trivial_group_algebra_action(5)).values()
    assert triv.to_ints() == [[1, 0], [0, 1]]

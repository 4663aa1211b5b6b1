"""The C2 swap on k x k: crossed product, equivariant objects and the duality.

Run with ``python demos/swap_duality.py``.
"""
from equivalg.action import CrossedProduct, ModuleCategoryAction, weak_action_k0
from equivalg.algebra import direct_sum
from equivalg.decompose import BlockData
from equivalg.duality import DualAction, end_ind_check, orbit_census, verify_theta_equivalence
from equivalg.equivariant import EquivariantModule, hom_equivariant, to_crossed_module
from equivalg.instances import swap_action
from equivalg.scalar import Matrix

weak = swap_action(13)
act = ModuleCategoryAction(weak)
F = act.field
print(f"A = k x k over {F}, G = C2 acting by the swap")

cp = CrossedProduct(weak)
B = cp.algebra
print(f"crossed product: dim {B.dim}, centre dim {len(B.center())}, "
      f"simple modules of dims {[S.dim for S in BlockData(B).simples]}")
# so A * C2 is the 2x2 matrix algebra

S1, S2 = BlockData(act.algebra).simples
X = direct_sum([S1, S2])
e, s = act.group.elements
E = EquivariantModule(act, X, {e: Matrix.identity(F, 2), s: Matrix.from_entries(F, [[0, 1], [1, 0]])})
print("(S1 + S2, swap) is equivariant:", E.validate().ok)
print("  its endomorphisms in the equivariant category:", len(hom_equivariant(E, E)))
print("  as a crossed-product module it has dim", to_crossed_module(E, cp).dim)

bad = EquivariantModule(act, X, {e: Matrix.identity(F, 2),
                                 s: Matrix.from_entries(F, [[0, -1], [1, 0]])})
print("(S1 + S2, swap . diag(1, -1)) fails:", [c.name for c in bad.validate().failures()])

dual = DualAction(act)
rep = verify_theta_equivalence(dual, act.default_probes())
print("duality functor on the default probes:", "ok" if rep.ok else rep.failures())

census = orbit_census(dual, [S1, S2])
print(f"orbits: {census.data['C_over_G']} on mod A, {census.data['CG_over_dual']} on the equivariant side")

end = end_ind_check(act, X)
print("End(Ind(S1 + S2)) = End(S1 + S2) * C2:", end.ok, end.checks[1].detail)

(perm,) = weak_action_k0(weak).values()
print("K0 permutation of the generator:", perm.to_ints())

"""Obstruction cocycles: a twist that lifts and one that does not.

Run with ``python demos/obstruction.py``.
"""
from equivalg.action import ModuleCategoryAction
from equivalg.duality import central_twist_data
from equivalg.instances import permutation_map, swap_action, twisted_c2_action
from equivalg.obstruction import (CommutingFunctorDatum, exhaustive_coboundary_search, kernel_check,
                                  obstruction_cocycle, obstruction_report)
from equivalg.scalar import Matrix

# twisted C2 datum over F_5 with c(s, s) = 2; twisting by the generator lifts
act = ModuleCategoryAction(twisted_c2_action(5, 2))
e, s = act.group.elements
fd = central_twist_data(act, s)
datum = CommutingFunctorDatum(act, fd.tau, fd.delta)
rep = obstruction_report(datum, act.default_probes())
print("central twist:", rep.data["class"], "lift delta:", rep.data["lift_delta"])

# the swap over F_5, commuting with itself only up to delta_s = (2, 1)
weak = swap_action(5)
act = ModuleCategoryAction(weak)
A = weak.algebra
e, s = act.group.elements
datum = CommutingFunctorDatum(act, permutation_map(A, [1, 0]), {e: A.unit, s: Matrix.column(A.field, [2, 1])})
probes = act.default_probes()
sigma = obstruction_cocycle(datum, probes)
print("projective commutation: sigma(s, s) =", sigma(s, s))
rep = obstruction_report(datum, probes, seed=1)
print("  class:", rep.data["class"], "| centre is k:", rep.data["center_is_k"])
count, found = exhaustive_coboundary_search(sigma)
print(f"  exhaustive search: {len(found)} coboundaries among {count} candidates")

# rescaling delta changes sigma by a coboundary only
lam = {e: A.field(3), s: A.field(4)}
print("  after rescaling delta: sigma(s, s) =", obstruction_cocycle(datum.rescaled(lam), probes)(s, s))

# on the twisted datum the centre is k; the supplied data (Id, delta_s = 4) is the sign character
tw = ModuleCategoryAction(twisted_c2_action(5, 2))
unit = tw.algebra.unit
rep = kernel_check(tw, [{e: unit, s: unit * 4}])
print("kernel check on the twisted datum:", "ok" if rep.ok else rep.failures(),
      "| supplied datum matches character", rep.checks[-1].detail["matches"])

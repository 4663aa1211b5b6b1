"""Cyclic actions from compatible pairs, and d-compatibility of scalings.

Run with ``python demos/cyclic_pairs.py``.
"""
from equivalg.action import (CompatiblePair, ModuleCategoryAction, compatible_pair_from_action, cyclic_round_trip,
                             induced_cyclic_action, is_d_compatible, root_hypotheses)
from equivalg.algebra import truncated_polynomial_algebra
from equivalg.instances import cyclic_shift_action, scaling_automorphism, twisted_c2_action
from equivalg.scalar import PrimeField

for weak in (cyclic_shift_action(13, 3), twisted_c2_action(5, 2)):
    act = ModuleCategoryAction(weak)
    pair, rep = compatible_pair_from_action(act)
    g = act.group.cyclic_generator()
    print(f"order {pair.d} action on dim {weak.algebra.dim}: a = {pair.a.flat()}, "
          f"rebuilt action agrees: {cyclic_round_trip(act, pair, g, act.default_probes())}")

F = PrimeField(13)
A = truncated_polynomial_algebra(F, 2)
for lam in (1, 12, 5):
    sigma = scaling_automorphism(13, lam)
    witness = is_d_compatible(A, sigma, 2)
    print(f"x -> {lam} x on k[x]/(x^2) is 2-compatible: {witness is not None}")
    if witness is not None:
        weak = induced_cyclic_action(CompatiblePair(sigma, A.inverse(witness), 2))
        print("  induced C2 action valid:", weak.validate().ok)

print("root hypotheses over F_13:")
for d in (2, 3, 5):
    data = root_hypotheses(F, d).data
    print(f"  d = {d}: every element a d-th power {data['every_element_has_dth_root']}, "
          f"primitive d-th roots {data['has_primitive_dth_roots']}")

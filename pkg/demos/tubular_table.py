"""Grading groups of the tubular types and the three graded automorphisms.

Run with ``python demos/tubular_table.py``. Takes a few seconds.
"""
from equivalg.tubular import (TYPES, coordinate_algebra, default_field, epsilon, grading_group, scaling_order,
                              sqrt_minus_one, table1, table1_compatible_pairs)

F = default_field()
print(f"field {F}: sqrt(-1) = {sqrt_minus_one(F)}, epsilon = {epsilon(F)}")

for kind in TYPES:
    L = grading_group([int(p) for p in kind.split(",")])
    print(f"L({kind}): invariants {L.invariants}, omega has order {L.order(L.omega)}")

S = coordinate_algebra("2,2,2,2", F, -1)
print(S.name, "relations:", [S.fmt(r) for r in S.relations()])
print("  x3^2 reduces to", S.fmt(S.reduce({(0, 0, 2, 0): 1})))

for d in table1(F):
    m, p = scaling_order(d)
    print(f"{d.name} on {d.presentation.name}: {d.name}^{m} scales the generators by {list(p.scalars)}")

rep, actions = table1_compatible_pairs(F)
print("all checks on 8-step truncations:", "ok" if rep.ok else rep.failures())
for name, weak in actions.items():
    print(f"  {name}: cyclic action of order {weak.group.order} on an algebra of dim {weak.algebra.dim}, "
          f"valid: {weak.validate().ok}")

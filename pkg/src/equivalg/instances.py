"""Small bundled weak actions used by the tests, demos and CLI corpus."""
from __future__ import annotations

from .abgroup import FinAbGroup
from .action import WeakAction
from .algebra import Algebra, AlgebraMap, group_algebra, product_of_fields, truncated_polynomial_algebra
from .scalar import Matrix, PrimeField


def permutation_map(A: Algebra, perm: list[int]) -> AlgebraMap:
    """Automorphism of a product of fields sending ``e_i`` to ``e_{perm[i]}``."""
    n = A.dim
    rows = [[1 if perm[j] == i else 0 for j in range(n)] for i in range(n)]
    return AlgebraMap(A, A, Matrix.from_entries(A.field, rows))


def swap_action(p: int = 13) -> WeakAction:
    """``C_2`` swapping the factors of ``k x k`` with trivial cocycle."""
    F = PrimeField(p)
    A = product_of_fields(F, 2)
    G = FinAbGroup((2,))
    swap = permutation_map(A, [1, 0])
    return WeakAction.strict(G, A, {(0,): AlgebraMap.identity(A), (1,): swap})


def twisted_c2_action(p: int = 5, value: int = 2) -> WeakAction:
    """Trivial ``rho`` on ``k`` with ``c(g, g) = value`` and all other entries 1."""
    F = PrimeField(p)
    A = product_of_fields(F, 1)
    G = FinAbGroup((2,))
    ident = AlgebraMap.identity(A)
    c = {(g, h): A.unit for g in G.elements for h in G.elements}
    c[((1,), (1,))] = A.scalar(value)
    return WeakAction(G, A, {g: ident for g in G.elements}, c)


def cyclic_shift_action(p: int = 13, n: int = 3) -> WeakAction:
    """``C_n`` cyclically permuting the factors of ``k^n``."""
    F = PrimeField(p)
    A = product_of_fields(F, n)
    G = FinAbGroup((n,))
    rho = {(j,): permutation_map(A, [(i + j) % n for i in range(n)]) for j in range(n)}
    return WeakAction.strict(G, A, rho)


def trivial_group_algebra_action(p: int = 5) -> WeakAction:
    """Trivial ``C_2`` action on ``k C_2``."""
    F = PrimeField(p)
    G = FinAbGroup((2,))
    return WeakAction.trivial(G, group_algebra(F, G))


def scaling_automorphism(p: int, lam: int) -> AlgebraMap:
    """``x -> lam x`` on ``k[x]/(x^2)``."""
    A = truncated_polynomial_algebra(PrimeField(p), 2)
    return AlgebraMap(A, A, Matrix.from_entries(A.field, [[1, 0], [0, lam]]))


BUNDLED = {
    "swap_c2": swap_action,
    "twisted_c2": twisted_c2_action,
    "shift_c3": cyclic_shift_action,
    "trivial_kc2": trivial_group_algebra_action,
}

"""Integer linear algebra: Smith normal form and congruence systems."""
from __future__ import annotations

import itertools
from math import gcd

import sympy
from sympy.matrices.normalforms import smith_normal_decomp


def smith_form(rows: list[list[int]]) -> tuple[list[int], list[list[int]], list[list[int]]]:
    """Return ``(diag, U, V)`` with ``U * A * V`` diagonal, ``diag`` its
    diagonal (length ``min(m, n)``) and ``U``, ``V`` unimodular."""
    m = len(rows)
    n = len(rows[0]) if rows else 0
    if m == 0 or n == 0:
        return [], [[int(i == j) for j in range(m)] for i in range(m)], [[int(i == j) for j in range(n)] for i in range(n)]
    D, U, V = smith_normal_decomp(sympy.Matrix(rows))
    diag = [int(abs(D[i, i])) for i in range(min(m, n))]
    U = [[int(U[i, j]) for j in range(m)] for i in range(m)]
    V = [[int(V[i, j]) for j in range(n)] for i in range(n)]
    # normalise signs so the diagonal is non-negative
    for i in range(min(m, n)):
        if D[i, i] < 0:
            U[i] = [-v for v in U[i]]
    return diag, U, V


def solve_mod(rows: list[list[int]], rhs: list[int], modulus: int, limit: int = 10_000) -> list[list[int]]:
    """All solutions of ``A x = b (mod modulus)``, up to ``limit`` of them.

    Solutions are returned with entries in ``[0, modulus)``, sorted.
    """
    m = len(rows)
    n = len(rows[0]) if rows else 0
    diag, U, V = smith_form(rows)
    ub = [sum(U[i][k] * rhs[k] for k in range(m)) % modulus for i in range(m)]
    choices: list[list[int]] = []
    for i in range(n):
        d = diag[i] if i < len(diag) else 0
        target = ub[i] if i < m else 0
        g = gcd(d, modulus)
        if target % g:
            return []
        step = modulus // g
        if d == 0:
            choices.append(list(range(modulus)))
            continue
        base = (target // g) * pow(d // g, -1, step) % step if step > 1 else 0
        choices.append([base + k * step for k in range(g)])
    for i in range(n, m):
        if ub[i] % modulus:
            return []
    sols = set()
    for count, y in enumerate(itertools.product(*choices)):
        if count >= limit:
            break
        x = tuple(sum(V[i][j] * y[j] for j in range(n)) % modulus for i in range(n))
        sols.add(x)
    return sorted(list(s) for s in sols)

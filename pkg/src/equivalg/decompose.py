"""Radicals, primitive idempotents, Krull-Schmidt splitting and K_0.

An idempotent ``e`` is declared primitive when ``eAe / eJe`` is
one-dimensional, or when some element of ``eAe`` has a minimal polynomial
that is a power of one irreducible of degree ``dim eAe / eJe`` (so the
quotient is a field). Otherwise an element whose minimal polynomial has two
coprime factors is used to split ``e``.
"""
from __future__ import annotations

import random
from typing import Sequence

from .algebra import (Algebra, DEFAULT_BOUND, ModuleRep, algebra_from_matrices, find_isomorphism,
                      hom_space)
from .report import SearchUndetermined
from .scalar import Field, Matrix, lincomb, span_basis


# ---------------------------------------------------------------------------
# polynomials over a field, raw coefficient lists lowest degree first


def _trim(F: Field, p: list) -> list:
    p = list(p)
    while p and F.is_zero(p[-1]):
        p.pop()
    return p


def _pmul(F: Field, a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [F.zero_raw] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = F.add(out[i + j], F.mul(x, y))
    return _trim(F, out)


def _psub(F: Field, a: list, b: list) -> list:
    n = max(len(a), len(b))
    a = a + [F.zero_raw] * (n - len(a))
    b = b + [F.zero_raw] * (n - len(b))
    return _trim(F, [F.sub(x, y) for x, y in zip(a, b)])


def _pdivmod(F: Field, a: list, b: list) -> tuple[list, list]:
    a = _trim(F, a)
    b = _trim(F, b)
    q = [F.zero_raw] * max(0, len(a) - len(b) + 1)
    inv_lead = F.inv(b[-1])
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        c = F.mul(a[-1], inv_lead)
        q[shift] = c
        a = _psub(F, a, [F.zero_raw] * shift + [F.mul(c, v) for v in b])
    return _trim(F, q), a


def _pextgcd(F: Field, a: list, b: list) -> tuple[list, list, list]:
    """``(g, s, t)`` with ``s a + t b = g``."""
    r0, r1 = _trim(F, a), _trim(F, b)
    s0, s1 = [F.one_raw], []
    t0, t1 = [], [F.one_raw]
    while r1:
        q, r = _pdivmod(F, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _psub(F, s0, _pmul(F, q, s1))
        t0, t1 = t1, _psub(F, t0, _pmul(F, q, t1))
    return r0, s0, t0


def _ppow(F: Field, a: list, k: int) -> list:
    out = [F.one_raw]
    for _ in range(k):
        out = _pmul(F, out, a)
    return out


# ---------------------------------------------------------------------------
# radical


def _trace_form_kernel(A: Algebra, space: Sequence[Matrix]) -> list[Matrix]:
    """``{x in span(space) : tr(L_{xy} restricted to span) = 0 for y in span}``."""
    F = A.field
    if not space:
        return []
    V = Matrix.hstack_all(F, list(space), A.dim)
    from .algebra import left_inverse
    Linv = left_inverse(V)

    def restricted(u: Matrix) -> Matrix:
        return Linv @ A.left_matrix(u) @ V

    ops = [restricted(v) for v in space]
    n = len(space)
    T = Matrix(F, [[(ops[i] @ ops[j]).trace().raw for j in range(n)] for i in range(n)], n, n)
    return [V @ k for k in T.nullspace()]


def _is_nilpotent_ideal(A: Algebra, basis: Sequence[Matrix]) -> bool:
    power = list(basis)
    for _ in range(A.dim + 1):
        if not power:
            return True
        nxt = A.span_products(power, basis)
        if len(nxt) == len(power):
            return False
        power = nxt
    return not power


def _power_trace_function(A: Algebra, z: Matrix, i: int) -> int:
    """``(Tr(Z^(p^i)) mod p^(i+1)) / p^i`` for an integer lift ``Z`` of ``L_z``."""
    p = A.field.characteristic
    mod = p ** (i + 1)
    Z = [list(r) for r in A.left_matrix(z).rows]
    n = len(Z)
    R = [[int(a == b) for b in range(n)] for a in range(n)]
    for _ in range(p ** i):
        R = [[sum(R[a][k] * Z[k][b] for k in range(n)) % mod for b in range(n)] for a in range(n)]
    tr = sum(R[a][a] for a in range(n)) % mod
    if tr % (p ** i):
        raise ArithmeticError("power trace not divisible as expected")
    return tr // p ** i


def radical(A: Algebra) -> list[Matrix]:
    """Basis of the Jacobson radical.

    In characteristic 0, or characteristic larger than ``dim A``, this is the
    kernel of the trace form. Over a small prime field the filtration
    ``I_i = {x in I_(i-1) : g_i(x y) = 0 for all y}`` is used, where ``g_i``
    reads off ``Tr(Z^(p^i))`` of an integer lift modulo ``p^(i+1)``; it reaches
    the radical at ``i = floor(log_p dim A)``.
    """
    F = A.field
    I = _trace_form_kernel(A, A.basis)
    if F.characteristic == 0 or F.characteristic > A.dim:
        return I
    p = F.characteristic
    i = 0
    while p ** (i + 1) <= A.dim and I:
        i += 1
        V = Matrix.hstack_all(F, I, A.dim)
        rows = [[_power_trace_function(A, A.mul(x, y), i) for x in I] for y in A.basis]
        I = [V @ k for k in Matrix.from_entries(F, rows).nullspace()]
    if not _is_nilpotent_ideal(A, I):
        raise ArithmeticError("radical computation produced a non-nilpotent ideal")
    return I


# ---------------------------------------------------------------------------
# idempotents


def corner_basis(A: Algebra, e: Matrix, space: Sequence[Matrix] | None = None) -> list[Matrix]:
    """Basis of ``e X e`` for ``X`` the span of ``space`` (default: ``A``)."""
    vecs = [A.prod(e, v, e) for v in (space if space is not None else A.basis)]
    return span_basis(A.field, vecs, A.dim)


def minimal_polynomial(A: Algebra, x: Matrix, unit: Matrix) -> list:
    """Minimal polynomial of ``x`` in the corner algebra with identity ``unit``."""
    F = A.field
    powers = [unit]
    while True:
        nxt = A.mul(powers[-1], x)
        M = Matrix.hstack_all(F, powers, A.dim)
        sol = M.solve(nxt)
        if sol.consistent:
            return [F.neg(v) for v in sol.particular.flat()] + [F.one_raw]
        powers.append(nxt)


def _evaluate(A: Algebra, poly: list, x: Matrix, unit: Matrix) -> Matrix:
    out = A.zero
    for c in reversed(poly):
        out = A.mul(out, x) + unit * c
    return out


def _split_with(A: Algebra, e: Matrix, x: Matrix, top_dim: int | None = None):
    """Split ``e`` using the minimal polynomial of ``x``.

    Returns a pair of idempotents, ``"local"`` when the minimal polynomial is
    a power of one irreducible ``f`` with ``deg f`` equal to ``top_dim`` (then
    ``k[x]`` fills the semisimple quotient of ``eAe``, which is thus a field),
    or ``None``.
    """
    F = A.field
    mp = minimal_polynomial(A, x, e)
    factors = F.factor_poly(mp)
    if len(factors) < 2:
        if top_dim is not None and factors and len(factors[0][0]) - 1 == top_dim:
            return "local"
        return None
    f1 = _ppow(F, factors[0][0], factors[0][1])
    rest = [F.one_raw]
    for fac, mult in factors[1:]:
        rest = _pmul(F, rest, _ppow(F, fac, mult))
    g, s, t = _pextgcd(F, f1, rest)
    ginv = F.inv(g[0])
    # t * rest is 1 modulo f1 and 0 modulo rest
    poly = _pmul(F, t, rest)
    poly = [F.mul(v, ginv) for v in poly]
    e1 = _evaluate(A, poly, x, e)
    e2 = e - e1
    if A.mul(e1, e1) != e1 or A.mul(e1, e2) != A.zero or e1.is_zero() or e2.is_zero():
        raise ArithmeticError("idempotent splitting produced an invalid pair")
    return e1, e2


def primitive_idempotents(A: Algebra, *, seed: int = 0, budget: int = 200, J: list[Matrix] | None = None) -> list[Matrix]:
    """A complete set of orthogonal primitive idempotents.

    A corner ``eAe`` is certified local when its semisimple quotient is
    ``k`` or is a field generated by a single element. Raises ``SearchUndetermined``
    ("inconclusive decomposition") when neither a certificate nor a
    splitting element turns up within the budget.
    """
    F = A.field
    J = radical(A) if J is None else J
    rng = random.Random(seed)
    done: list[Matrix] = []
    work = [A.unit]
    while work:
        e = work.pop(0)
        B = corner_basis(A, e)
        JB = corner_basis(A, e, J)
        if len(B) - len(JB) == 1:
            done.append(e)
            continue
        candidates = list(B)
        pair = None
        for attempt in range(budget + len(candidates)):
            if attempt < len(candidates):
                x = candidates[attempt]
            else:
                coeffs = [F.random_raw(rng) for _ in B]
                x = lincomb(F, [F.coerce(c) for c in coeffs], B)
            pair = _split_with(A, e, x, len(B) - len(JB))
            if pair:
                break
        if pair is None:
            raise SearchUndetermined("inconclusive decomposition")
        if pair == "local":
            done.append(e)
            continue
        work = list(pair) + work
    return done


def check_idempotent_set(A: Algebra, idems: Sequence[Matrix]) -> bool:
    total = A.zero
    for i, e in enumerate(idems):
        total = total + e
        for j, f in enumerate(idems):
            prod = A.mul(e, f)
            if prod != (e if i == j else A.zero):
                return False
    return total == A.unit


# ---------------------------------------------------------------------------
# projectives, simples, K_0


def projective_module(A: Algebra, e: Matrix) -> tuple[ModuleRep, Matrix]:
    """``eA`` as a right module, with its basis matrix inside ``A``."""
    V = Matrix.hstack_all(A.field, span_basis(A.field, [A.mul(e, b) for b in A.basis], A.dim), A.dim)
    return ModuleRep.regular(A).restrict(V), V


def simple_top(A: Algebra, e: Matrix, J: Sequence[Matrix]) -> ModuleRep:
    """``eA / eJ``."""
    P, V = projective_module(A, e)
    eJ = span_basis(A.field, [A.mul(e, j) for j in J], A.dim)
    from .algebra import left_inverse
    Linv = left_inverse(V)
    sub = Matrix.hstack_all(A.field, [Linv @ v for v in eJ], P.dim) if eJ else Matrix.zeros(A.field, P.dim, 0)
    S, _ = P.quotient(sub)
    return S


def group_by_isomorphism(mods: Sequence[ModuleRep], **kw) -> list[int]:
    """Class label for each module: the index of the first isomorphic one."""
    labels: list[int] = []
    for i, M in enumerate(mods):
        label = i
        for j in range(i):
            if labels[j] == j and find_isomorphism(mods[j], M, **kw) is not None:
                label = j
                break
        labels.append(label)
    return labels


class BlockData:
    """Primitive idempotents with their projectives, simples and K_0 classes."""

    def __init__(self, A: Algebra, *, seed: int = 0, bound: int = DEFAULT_BOUND):
        self.algebra = A
        self.radical = radical(A)
        self.idempotents = primitive_idempotents(A, seed=seed, J=self.radical)
        self.projectives = [projective_module(A, e)[0] for e in self.idempotents]
        labels = group_by_isomorphism(self.projectives, seed=seed, bound=bound)
        self.class_reps = sorted(set(labels))
        self.class_of = [self.class_reps.index(l) for l in labels]
        self.simples = [simple_top(A, self.idempotents[i], self.radical) for i in self.class_reps]
        self.indecomposable_projectives = [self.projectives[i] for i in self.class_reps]


def k0_action(A: Algebra, automorphisms: dict, *, seed: int = 0, bound: int = DEFAULT_BOUND,
              blocks: BlockData | None = None) -> dict:
    """Permutation matrices of ``[P] -> [twist(P, automorphisms[g])]`` on the
    basis of indecomposable projective classes."""
    data = blocks or BlockData(A, seed=seed, bound=bound)
    reps = data.indecomposable_projectives
    n = len(reps)
    out = {}
    for g, sigma in automorphisms.items():
        perm = [[0] * n for _ in range(n)]
        for i, P in enumerate(reps):
        # the twist of an indecomposable projective is again one
            T = P.twist(sigma)
            hits = [j for j, Q in enumerate(reps) if find_isomorphism(T, Q, seed=seed, bound=bound) is not None]
            if len(hits) != 1:
                raise ArithmeticError("twisted projective matches no unique class")
            perm[hits[0]][i] = 1
        out[g] = Matrix.from_entries(A.field, perm)
    return out


# ---------------------------------------------------------------------------
# Krull-Schmidt splitting of objects with a known endomorphism algebra


def split_endomorphism_algebra(field: Field, end_basis: Sequence[Matrix], *, seed: int = 0) -> list[Matrix]:
    """Primitive idempotents of an endomorphism algebra given as matrices."""
    if not end_basis:
        return []
    E = algebra_from_matrices(field, list(end_basis))
    idems = primitive_idempotents(E, seed=seed)
    return [lincomb(field, e.flat(), list(end_basis)) for e in idems]


def image_basis(e: Matrix) -> Matrix:
    cols = e.column_space()
    return Matrix.hstack_all(e.field, cols, e.nrows)


def decompose_module(M: ModuleRep, *, seed: int = 0) -> list[tuple[ModuleRep, Matrix, Matrix]]:
    """Indecomposable summands of ``M`` as ``(summand, inclusion, projection)``."""
    if M.dim == 0:
        return []
    out = []
    for e in split_endomorphism_algebra(M.field, hom_space(M, M), seed=seed):
        V = image_basis(e)
        proj = V.solve(e).particular
        out.append((M.restrict(V), V, proj))
    return out

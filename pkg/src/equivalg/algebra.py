"""Finite-dimensional algebras given by structure constants, their
automorphisms, and right modules.

Conventions
-----------
Elements are column vectors of coefficients in the chosen basis.

A right module of dimension ``m`` is stored as one ``m x m`` matrix per
basis element: ``act(r)`` is the matrix of ``v -> v.r`` acting on column
vectors. The right-module law reads ``act(r s) = act(s) @ act(r)``.

A module morphism ``M -> N`` is an ``N.dim x M.dim`` matrix ``f`` with
``f @ M.act(r) = N.act(r) @ f``.
"""
from __future__ import annotations

import itertools
import random
from functools import cached_property
from typing import Sequence

from .report import Report, SearchUndetermined
from .scalar import Field, Matrix, Scalar, field_from_json, lincomb


class Algebra:
    """Associative unital algebra with basis ``b_0 .. b_{n-1}``.

    ``products[i][j]`` is the coefficient column of ``b_i b_j``.
    """

    def __init__(self, field: Field, products: Sequence[Sequence[Matrix]], unit: Matrix,
                 basis_names: Sequence[str] | None = None):
        self.field = field
        self.dim = len(products)
        self.products = [list(row) for row in products]
        self.unit = unit
        self.basis_names = list(basis_names) if basis_names else [f"b{i}" for i in range(self.dim)]

    # basic elements ------------------------------------------------------
    def element(self, coeffs) -> Matrix:
        if len(coeffs) != self.dim:
            raise ValueError(f"expected {self.dim} coefficients")
        return Matrix.column(self.field, coeffs)

    def basis_element(self, i: int) -> Matrix:
        return Matrix.unit_vector(self.field, self.dim, i)

    @property
    def basis(self) -> list[Matrix]:
        return [self.basis_element(i) for i in range(self.dim)]

    @property
    def one(self) -> Matrix:
        return self.unit

    @property
    def zero(self) -> Matrix:
        return Matrix.zeros(self.field, self.dim, 1)

    def scalar(self, s) -> Matrix:
        return self.unit * s

    # multiplication ------------------------------------------------------
    @cached_property
    def left_basis_matrices(self) -> list[Matrix]:
        """``L(b_i)``: column ``j`` holds ``b_i b_j``."""
        return [Matrix.hstack_all(self.field, self.products[i], self.dim) for i in range(self.dim)]

    @cached_property
    def right_basis_matrices(self) -> list[Matrix]:
        """``R(b_i)``: column ``j`` holds ``b_j b_i``."""
        return [Matrix.hstack_all(self.field, [self.products[j][i] for j in range(self.dim)], self.dim)
                for i in range(self.dim)]

    def left_matrix(self, u: Matrix) -> Matrix:
        return lincomb(self.field, u.flat(), self.left_basis_matrices)

    def right_matrix(self, u: Matrix) -> Matrix:
        return lincomb(self.field, u.flat(), self.right_basis_matrices)

    def mul(self, u: Matrix, v: Matrix) -> Matrix:
        return self.left_matrix(u) @ v

    def prod(self, *elements: Matrix) -> Matrix:
        out = self.unit
        for e in elements:
            out = self.mul(out, e)
        return out

    def power(self, u: Matrix, k: int) -> Matrix:
        if k < 0:
            return self.power(self.inverse(u), -k)
        out = self.unit
        for _ in range(k):
            out = self.mul(out, u)
        return out

    def is_unit(self, u: Matrix) -> bool:
        return self.left_matrix(u).is_invertible()

    def inverse(self, u: Matrix) -> Matrix:
        sol = self.left_matrix(u).solve(self.unit)
        if not sol.consistent or self.mul(sol.particular, u) != self.unit:
            raise ValueError("element is not invertible")
        return sol.particular

    def commutator(self, u: Matrix, v: Matrix) -> Matrix:
        return self.mul(u, v) - self.mul(v, u)

    # structure -----------------------------------------------------------
    def validate(self) -> Report:
        """Associativity on all basis triples and the two unit laws."""
        rep = Report("validate-algebra")
        L = self.left_basis_matrices
        bad = []
        for i in range(self.dim):
            for j in range(self.dim):
                if self.left_matrix(self.products[i][j]) != L[i] @ L[j]:
                    bad.append([i, j])
        rep.add("associative", not bad, {"failing_pairs": bad[:10]} if bad else None)
        ident = Matrix.identity(self.field, self.dim)
        rep.add("left_unit", self.left_matrix(self.unit) == ident)
        rep.add("right_unit", self.right_matrix(self.unit) == ident)
        rep.data["dim"] = self.dim
        return rep

    def center(self) -> list[Matrix]:
        """Basis of the centre: solutions of ``z b_i = b_i z`` for all i."""
        blocks = [self.right_basis_matrices[i] - self.left_basis_matrices[i] for i in range(self.dim)]
        if not blocks:
            return []
        system = blocks[0]
        for b in blocks[1:]:
            system = system.vstack(b)
        return system.nullspace()

    def span_products(self, U: Sequence[Matrix], V: Sequence[Matrix]) -> list[Matrix]:
        """Basis of the span of all products ``u v``."""
        from .scalar import span_basis
        return span_basis(self.field, [self.mul(u, v) for u in U for v in V], self.dim)

    def is_commutative(self) -> bool:
        return all(self.products[i][j] == self.products[j][i] for i in range(self.dim) for j in range(i))

    # serialisation -------------------------------------------------------
    def to_json(self) -> dict:
        F = self.field
        mul = []
        for i in range(self.dim):
            for j in range(self.dim):
                for k, v in enumerate(self.products[i][j].flat()):
                    if not F.is_zero(v):
                        mul.append([i, j, k, F.to_json(v)])
        return {
            "field": F.spec(),
            "dim": self.dim,
            "basis": self.basis_names,
            "mul": mul,
            "unit": [F.to_json(v) for v in self.unit.flat()],
        }

    @classmethod
    def from_json(cls, obj: dict, field: Field | None = None) -> "Algebra":
        F = field or field_from_json(obj["field"])
        n = int(obj["dim"])
        table = [[[F.zero_raw] * n for _ in range(n)] for _ in range(n)]
        for i, j, k, s in obj["mul"]:
            table[i][j][k] = F.add(table[i][j][k], F.from_json(s))
        products = [[Matrix(F, [[v] for v in table[i][j]], n, 1) for j in range(n)] for i in range(n)]
        unit = Matrix(F, [[F.from_json(v)] for v in obj["unit"]], n, 1)
        return cls(F, products, unit, obj.get("basis"))

    def __eq__(self, other):
        return (isinstance(other, Algebra) and self.field == other.field and self.dim == other.dim
                and self.products == other.products and self.unit == other.unit)

    def __hash__(self):
        return hash((self.field, self.dim))

    def __repr__(self):
        return f"Algebra(dim={self.dim}, field={self.field})"


# ---------------------------------------------------------------------------
# standard algebras


def algebra_from_matrices(field: Field, mats: Sequence[Matrix], names: Sequence[str] | None = None) -> Algebra:
    """The algebra spanned by linearly independent square matrices that is
    closed under matrix multiplication and contains the identity."""
    n = len(mats)
    size = mats[0].nrows
    flat = Matrix(field, [[m.rows[r][c] for m in mats] for r in range(size) for c in range(size)], size * size, n)

    def coords(X: Matrix) -> Matrix:
        rhs = Matrix(field, [[X.rows[r][c]] for r in range(size) for c in range(size)], size * size, 1)
        sol = flat.solve(rhs)
        if not sol.consistent:
            raise ValueError("matrices are not closed under multiplication")
        return sol.particular

    products = [[coords(mats[i] @ mats[j]) for j in range(n)] for i in range(n)]
    unit = coords(Matrix.identity(field, size))
    return Algebra(field, products, unit, names)


def product_of_fields(field: Field, n: int) -> Algebra:
    """``k x ... x k`` with basis the primitive idempotents."""
    z = lambda: Matrix.zeros(field, n, 1)
    products = [[Matrix.unit_vector(field, n, i) if i == j else z() for j in range(n)] for i in range(n)]
    unit = Matrix.column(field, [1] * n)
    return Algebra(field, products, unit, [f"e{i + 1}" for i in range(n)])


def group_algebra(field: Field, group) -> Algebra:
    """``k G`` for a finite abelian group with basis the group elements."""
    els = group.elements
    n = len(els)
    idx = {g: i for i, g in enumerate(els)}
    products = [[Matrix.unit_vector(field, n, idx[group.mul(g, h)]) for h in els] for g in els]
    unit = Matrix.unit_vector(field, n, idx[group.identity])
    return Algebra(field, products, unit, ["g" + group.key(g) for g in els])


def matrix_algebra(field: Field, n: int) -> Algebra:
    """``M_n(k)`` with basis the matrix units ``E_ij`` in row-major order."""
    mats = []
    for i in range(n):
        for j in range(n):
            E = [[0] * n for _ in range(n)]
            E[i][j] = 1
            mats.append(Matrix.from_entries(field, E))
    return algebra_from_matrices(field, mats, [f"E{i}{j}" for i in range(n) for j in range(n)])


def truncated_polynomial_algebra(field: Field, n: int) -> Algebra:
    """``k[x]/(x^n)`` with basis ``1, x, ..., x^{n-1}``."""
    products = [[Matrix.unit_vector(field, n, i + j) if i + j < n else Matrix.zeros(field, n, 1)
                 for j in range(n)] for i in range(n)]
    return Algebra(field, products, Matrix.unit_vector(field, n, 0), [f"x^{i}" for i in range(n)])


# ---------------------------------------------------------------------------
# algebra maps


class AlgebraMap:
    """Linear map ``A -> B`` with ``matrix`` column ``i`` the image of ``b_i``."""

    def __init__(self, source: Algebra, target: Algebra, matrix: Matrix):
        self.source = source
        self.target = target
        self.matrix = matrix

    @classmethod
    def identity(cls, A: Algebra) -> "AlgebraMap":
        return cls(A, A, Matrix.identity(A.field, A.dim))

    @classmethod
    def conjugation(cls, A: Algebra, a: Matrix) -> "AlgebraMap":
        """``x -> a x a^-1``."""
        ainv = A.inverse(a)
        return cls(A, A, A.left_matrix(a) @ A.right_matrix(ainv))

    def __call__(self, u: Matrix) -> Matrix:
        return self.matrix @ u

    def compose(self, other: "AlgebraMap") -> "AlgebraMap":
        """``self after other``."""
        return AlgebraMap(other.source, self.target, self.matrix @ other.matrix)

    def __matmul__(self, other: "AlgebraMap") -> "AlgebraMap":
        return self.compose(other)

    def inverse(self) -> "AlgebraMap":
        return AlgebraMap(self.target, self.source, self.matrix.inverse())

    def power(self, k: int) -> "AlgebraMap":
        if k < 0:
            return self.inverse().power(-k)
        out = AlgebraMap.identity(self.source)
        for _ in range(k):
            out = self.compose(out)
        return out

    def is_homomorphism(self) -> bool:
        A, B = self.source, self.target
        if self(A.unit) != B.unit:
            return False
        imgs = [self(b) for b in A.basis]
        return all(self(A.products[i][j]) == B.mul(imgs[i], imgs[j]) for i in range(A.dim) for j in range(A.dim))

    def is_automorphism(self) -> bool:
        return self.source == self.target and self.matrix.is_invertible() and self.is_homomorphism()

    def __eq__(self, other):
        return isinstance(other, AlgebraMap) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"AlgebraMap({self.matrix!r})"


# ---------------------------------------------------------------------------
# modules


class ModuleRep:
    """Right module over ``algebra`` given by action matrices on basis elements."""

    def __init__(self, algebra: Algebra, dim: int, action: Sequence[Matrix], name: str | None = None):
        self.algebra = algebra
        self.dim = dim
        self.action = list(action)
        self.name = name

    @property
    def field(self) -> Field:
        return self.algebra.field

    def act(self, r: Matrix) -> Matrix:
        if self.dim == 0:
            return Matrix.zeros(self.field, 0, 0)
        return lincomb(self.field, r.flat(), self.action)

    @classmethod
    def regular(cls, A: Algebra) -> "ModuleRep":
        return cls(A, A.dim, A.right_basis_matrices, "A")

    @classmethod
    def zero(cls, A: Algebra) -> "ModuleRep":
        return cls(A, 0, [Matrix.zeros(A.field, 0, 0)] * A.dim, "0")

    def validate(self) -> Report:
        rep = Report("validate-module")
        A = self.algebra
        rep.add("unit_acts_trivially", self.act(A.unit).is_identity() if self.dim else True)
        bad = []
        for i in range(A.dim):
            for j in range(A.dim):
                if self.act(A.products[i][j]) != self.action[j] @ self.action[i]:
                    bad.append([i, j])
        rep.add("right_action_law", not bad, {"failing_pairs": bad[:10]} if bad else None)
        return rep

    def twist(self, sigma: AlgebraMap) -> "ModuleRep":
        """The twisted module with ``m o r = m . sigma(r)``."""
        return ModuleRep(self.algebra, self.dim, [self.act(sigma(b)) for b in self.algebra.basis],
                         f"twist({self.name})" if self.name else None)

    def restrict(self, V: Matrix) -> "ModuleRep":
        """Submodule on the column span of ``V`` (full column rank)."""
        Linv = left_inverse(V)
        acts = []
        for X in self.action:
            XV = X @ V
            Y = Linv @ XV
            if V @ Y != XV:
                raise ValueError("subspace is not a submodule")
            acts.append(Y)
        return ModuleRep(self.algebra, V.ncols, acts)

    def quotient(self, V: Matrix) -> tuple["ModuleRep", Matrix]:
        """Quotient by the submodule spanned by ``V``; returns the module and
        the projection matrix."""
        F = self.field
        n = self.dim
        # complement: extend V by standard vectors
        cols = list(V.columns())
        comp = []
        rank = V.rank() if V.ncols else 0
        for i in range(n):
            e = Matrix.unit_vector(F, n, i)
            trial = Matrix.hstack_all(F, cols + comp + [e], n)
            if trial.rank() > rank + len(comp):
                comp.append(e)
        basis = Matrix.hstack_all(F, cols + comp, n)
        binv = basis.inverse()
        k = V.ncols
        proj = binv.block(k, n, 0, n)
        C = Matrix.hstack_all(F, comp, n) if comp else Matrix.zeros(F, n, 0)
        acts = [proj @ X @ C for X in self.action]
        return ModuleRep(self.algebra, n - k, acts), proj

    def __eq__(self, other):
        return isinstance(other, ModuleRep) and self.dim == other.dim and self.action == other.action

    def __hash__(self):
        return hash((self.dim, tuple(self.action)))

    def to_json(self) -> dict:
        return {"dim": self.dim, "action": [m.to_json() for m in self.action]}

    @classmethod
    def from_json(cls, A: Algebra, obj: dict) -> "ModuleRep":
        return cls(A, int(obj["dim"]), [Matrix.from_json(A.field, m) for m in obj["action"]])

    def __repr__(self):
        return f"ModuleRep(dim={self.dim}{', ' + self.name if self.name else ''})"


def direct_sum(mods: Sequence[ModuleRep]) -> ModuleRep:
    A = mods[0].algebra
    acts = [Matrix.block_diag(A.field, [M.action[i] for M in mods]) for i in range(A.dim)]
    return ModuleRep(A, sum(M.dim for M in mods), acts)


def left_inverse(V: Matrix) -> Matrix:
    """A matrix ``L`` with ``L @ V = 1`` for ``V`` of full column rank."""
    sol = V.T.solve(Matrix.identity(V.field, V.ncols))
    if not sol.consistent:
        raise ValueError("matrix does not have full column rank")
    return sol.particular.T


def _reshape(v: Matrix, n: int, m: int) -> Matrix:
    flat = v.flat()
    return Matrix(v.field, [flat[r * m:(r + 1) * m] for r in range(n)], n, m)


def intertwiner_space(field: Field, pairs: Sequence[tuple[Matrix, Matrix]], n: int, m: int) -> list[Matrix]:
    """Basis of ``{f (n x m) : f @ A = B @ f for every (A, B) in pairs}``."""
    nvar = n * m
    if nvar == 0:
        return []
    F = field
    zero = F.zero_raw
    rows = []
    for A, B in pairs:
        for r in range(n):
            for c in range(m):
                row = [zero] * nvar
                for k in range(m):
                    v = A.rows[k][c]
                    if not F.is_zero(v):
                        row[r * m + k] = F.add(row[r * m + k], v)
                for k in range(n):
                    v = B.rows[r][k]
                    if not F.is_zero(v):
                        row[k * m + c] = F.sub(row[k * m + c], v)
                if any(not F.is_zero(x) for x in row):
                    rows.append(row)
    if not rows:
        return [_reshape(Matrix.unit_vector(F, nvar, i), n, m) for i in range(nvar)]
    return [_reshape(v, n, m) for v in Matrix(F, rows, len(rows), nvar).nullspace()]


def hom_space(M: ModuleRep, N: ModuleRep) -> list[Matrix]:
    """Basis of ``Hom_A(M, N)``."""
    return intertwiner_space(M.field, list(zip(M.action, N.action)), N.dim, M.dim)


def is_module_morphism(f: Matrix, M: ModuleRep, N: ModuleRep) -> bool:
    return f.shape == (N.dim, M.dim) and all(f @ a == b @ f for a, b in zip(M.action, N.action))


def twisted_module(sigma: AlgebraMap, M: ModuleRep) -> ModuleRep:
    return M.twist(sigma)


# ---------------------------------------------------------------------------
# searches for invertible elements


DEFAULT_BOUND = 30_000


def find_invertible_combination(field: Field, mats: Sequence[Matrix], *, seed: int = 0,
                                bound: int = DEFAULT_BOUND, samples: int = 64) -> list[Scalar] | None:
    """Coefficients ``t`` with ``sum t_j mats[j]`` invertible, or ``None`` when
    no such combination exists.

    The determinant of the combination is a polynomial of degree at most
    ``size`` in the coefficients. Absence is certified either by exhaustive
    enumeration (finite fields) or by vanishing on a grid with more than
    ``size`` points per coordinate. Raises ``SearchUndetermined`` when neither
    certificate fits within ``bound`` evaluations.
    """
    s = len(mats)
    if s == 0:
        return None
    size = mats[0].nrows
    if size == 0:
        return [field.one] + [field.zero] * (s - 1)

    def test(coeffs):
        M = lincomb(field, coeffs, mats)
        return M.is_invertible()

    # cheap deterministic probes, then seeded random ones
    for j in range(s):
        coeffs = [field.one if k == j else field.zero for k in range(s)]
        if test(coeffs):
            return coeffs
    rng = random.Random(seed)
    for _ in range(samples):
        coeffs = [field(rng.randint(-3, 3)) if not field.is_finite else Scalar(field, field.random_raw(rng))
                  for _ in range(s)]
        if test(coeffs):
            return coeffs

    exhaustive = field.size ** s if field.is_finite else None
    grid = (size + 1) ** s if (not field.is_finite or field.size > size) else None
    options = [c for c in (exhaustive, grid) if c is not None]
    if not options or min(options) > bound:
        raise SearchUndetermined(f"no invertible combination found among {samples} samples; "
                                 f"certification would need {min(options) if options else 'unbounded'} evaluations")
    if exhaustive is not None and exhaustive == min(options):
        values = list(field.elements())
    else:
        values = [field(v) for v in range(size + 1)]
    for coeffs in itertools.product(values, repeat=s):
        if test(list(coeffs)):
            return list(coeffs)
    return None


def find_unit_in_span(A: Algebra, vectors: Sequence[Matrix], **kw) -> Matrix | None:
    """A unit of ``A`` in the span of ``vectors``, or ``None`` if there is none."""
    coeffs = find_invertible_combination(A.field, [A.left_matrix(v) for v in vectors], **kw)
    if coeffs is None:
        return None
    return lincomb(A.field, coeffs, list(vectors))


def is_inner(A: Algebra, sigma: AlgebraMap, **kw) -> Matrix | None:
    """A unit ``a`` with ``sigma(x) = a^-1 x a`` for all x, or ``None``.

    Solves the linear conditions ``a sigma(b_i) = b_i a`` and then searches
    the solution space for a unit. Raises ``SearchUndetermined`` if the
    search budget runs out.
    """
    blocks = [A.right_matrix(sigma(b)) - A.left_basis_matrices[i] for i, b in enumerate(A.basis)]
    system = blocks[0]
    for b in blocks[1:]:
        system = system.vstack(b)
    return find_unit_in_span(A, system.nullspace(), **kw)


def find_isomorphism(M: ModuleRep, N: ModuleRep, **kw) -> Matrix | None:
    """An invertible module map ``M -> N``, or ``None`` if they are not isomorphic."""
    if M.dim != N.dim:
        return None
    if M.dim == 0:
        return Matrix.zeros(M.field, 0, 0)
    homs = hom_space(M, N)
    if len(hom_space(M, M)) != len(homs) or len(hom_space(N, N)) != len(homs):
        return None
    coeffs = find_invertible_combination(M.field, homs, **kw)
    if coeffs is None:
        return None
    return lincomb(M.field, coeffs, homs)

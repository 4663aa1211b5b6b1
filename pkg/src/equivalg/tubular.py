"""Grading groups ``L(p_1, ..., p_t)``, the homogeneous coordinate algebras of
the four tubular weight types, their graded automorphisms, and the cyclic
actions these automorphisms induce.

Polynomials are dicts from exponent tuples to raw field values. Reduction
rewrites a power of one generator into lower terms; with one rule per
generator and pairwise distinct leading generators every overlap resolves,
and ``critical_pairs_resolve`` checks that explicitly.

Sheaf categories are not modelled. The cyclic actions are realised on the
finite endomorphism algebra of the line bundles ``O(j x_i)`` (``0 <= j < p_i``)
and ``O(c)``, which is stable under every generator permutation of the same
weight.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from math import lcm
from typing import Sequence

from .action import CompatiblePair, induced_cyclic_action
from .algebra import Algebra, AlgebraMap
from .intlin import smith_form
from .report import Report
from .scalar import Field, FieldError, Matrix, PrimeField

Poly = dict  # exponent tuple -> raw nonzero coefficient


class GradingGroup:
    """``Z^t`` modulo ``p_i x_i = p_j x_j``, with canonical coordinates from the
    Smith form: one integer per free summand and a residue per torsion summand."""

    def __init__(self, weights: Sequence[int]):
        weights = tuple(int(p) for p in weights)
        if not weights or any(p <= 0 for p in weights):
            raise ValueError("weights must be positive")
        self.weights = weights
        t = len(weights)
        self.relations = []
        for j in range(1, t):
            row = [0] * t
            row[0] = weights[0]
            row[j] = -weights[j]
            self.relations.append(row)
        if self.relations:
            diag, _, V = smith_form(self.relations)
        else:
            diag, V = [], [[1]]
        invariants = [abs(d) for d in diag] + [0] * (t - len(diag))
        self._V = V
        self._keep = [i for i, d in enumerate(invariants) if d != 1]
        self.invariants = tuple(invariants[i] for i in self._keep)

    @property
    def ngens(self) -> int:
        return len(self.weights)

    def normal_form(self, v: Sequence[int]) -> tuple:
        """Canonical coordinates of the class of the exponent vector ``v``."""
        t = self.ngens
        if len(v) != t:
            raise ValueError(f"expected {t} exponents, got {len(v)}")
        w = [sum(v[r] * self._V[r][c] for r in range(t)) for c in range(t)]
        return tuple(w[i] % self.invariants[k] if self.invariants[k] else w[i] for k, i in enumerate(self._keep))

    def canonical(self, a: Sequence[int]) -> tuple:
        """Reduce coordinates that are already in the Smith basis."""
        if len(a) != len(self.invariants):
            raise ValueError(f"expected {len(self.invariants)} coordinates, got {len(a)}")
        return tuple(x % d if d else x for x, d in zip(a, self.invariants))

    def add(self, a: tuple, b: tuple) -> tuple:
        return tuple((x + y) % d if d else x + y for x, y, d in zip(a, b, self.invariants))

    def neg(self, a: tuple) -> tuple:
        return tuple((-x) % d if d else -x for x, d in zip(a, self.invariants))

    def sub(self, a: tuple, b: tuple) -> tuple:
        return self.add(a, self.neg(b))

    def scale(self, n: int, a: tuple) -> tuple:
        return tuple((n * x) % d if d else n * x for x, d in zip(a, self.invariants))

    @property
    def zero(self) -> tuple:
        return tuple(0 for _ in self.invariants)

    def generator(self, i: int) -> tuple:
        v = [0] * self.ngens
        v[i] = 1
        return self.normal_form(v)

    @property
    def c(self) -> tuple:
        return self.scale(self.weights[0], self.generator(0))

    @property
    def omega(self) -> tuple:
        """``(t - 2) c - sum x_i``; for three weights this is ``c - sum x_i``."""
        out = self.scale(self.ngens - 2, self.c)
        for i in range(self.ngens):
            out = self.sub(out, self.generator(i))
        return out

    def order(self, a: tuple, limit: int = 10_000) -> int:
        """Order of ``a``; 0 when it has infinite order."""
        if any(x and not d for x, d in zip(a, self.invariants)):
            return 0
        x = a
        for n in range(1, limit + 1):
            if x == self.zero:
                return n
            x = self.add(x, a)
        raise ValueError("order exceeds search limit")

    @cached_property
    def height(self) -> tuple[int, ...]:
        """The homomorphism ``L -> Z`` sending ``x_i`` to ``lcm(p) / p_i``."""
        m = lcm(*self.weights)
        return tuple(m // p for p in self.weights)

    def degree_of(self, exps: Sequence[int]) -> tuple:
        return self.normal_form(exps)

    def height_of(self, exps: Sequence[int]) -> int:
        return sum(e * h for e, h in zip(exps, self.height))

    def character_is_well_defined(self, values: Sequence, F: Field) -> bool:
        """Whether ``x_i -> values[i]`` kills every defining relation."""
        for row in self.relations:
            prod = F.one_raw
            for v, e in zip(values, row):
                prod = F.mul(prod, F.pow_raw(v, e))
            if prod != F.one_raw:
                return False
        return True


def grading_group(weights: Sequence[int]) -> GradingGroup:
    return GradingGroup(weights)


# ---------------------------------------------------------------------------
# polynomials


def _acc(F: Field, out: Poly, q: Poly, scale=None) -> Poly:
    """Add ``scale * q`` into ``out`` in place."""
    for m, v in q.items():
        if scale is not None:
            v = F.mul(v, scale)
        w = F.add(out.get(m, F.zero_raw), v)
        if F.is_zero(w):
            out.pop(m, None)
        else:
            out[m] = w
    return out


def _padd(F: Field, p: Poly, q: Poly, scale=None) -> Poly:
    return _acc(F, dict(p), q, scale)


def _mono_mul(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def _pmul(F: Field, p: Poly, q: Poly) -> Poly:
    out: Poly = {}
    for m1, v1 in p.items():
        for m2, v2 in q.items():
            _acc(F, out, {_mono_mul(m1, m2): F.mul(v1, v2)})
    return out


@dataclass
class Rule:
    """``x_var^power -> replacement``."""

    var: int
    power: int
    replacement: Poly

    def leading(self, n: int) -> tuple:
        return tuple(self.power if i == self.var else 0 for i in range(n))

    def as_relation(self, F: Field, n: int) -> Poly:
        return _padd(F, {self.leading(n): F.one_raw}, self.replacement, F.neg(F.one_raw))


@dataclass
class GradedPresentation:
    """Commutative algebra ``k[gens] / (rules)`` graded by ``group``."""

    name: str
    field: Field
    group: GradingGroup
    gens: list[str]
    rules: list[Rule]
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def nvars(self) -> int:
        return len(self.gens)

    def is_normal(self, m: tuple) -> bool:
        return all(m[r.var] < r.power for r in self.rules)

    def reduce_monomial(self, m: tuple) -> Poly:
        if m in self._cache:
            return self._cache[m]
        F = self.field
        for r in self.rules:
            if m[r.var] >= r.power:
                rest = tuple(e - r.power if i == r.var else e for i, e in enumerate(m))
                out: Poly = {}
                for mm, v in r.replacement.items():
                    _acc(F, out, self.reduce_monomial(_mono_mul(rest, mm)), v)
                break
        else:
            out = {m: F.one_raw}
        self._cache[m] = out
        return out

    def reduce(self, p: Poly) -> Poly:
        out: Poly = {}
        for m, v in p.items():
            _acc(self.field, out, self.reduce_monomial(m), v)
        return out

    def reduce_with_first(self, m: tuple, rule: Rule) -> Poly:
        """One rewrite step with ``rule`` at ``m``, then full reduction."""
        rest = tuple(e - rule.power if i == rule.var else e for i, e in enumerate(m))
        return self.reduce({_mono_mul(rest, mm): v for mm, v in rule.replacement.items()})

    def degree(self, m: tuple) -> tuple:
        return self.group.degree_of(m)

    def height(self, m: tuple) -> int:
        return self.group.height_of(m)

    def relations(self) -> list[Poly]:
        return [r.as_relation(self.field, self.nvars) for r in self.rules]

    def is_homogeneous(self, p: Poly) -> bool:
        return len({self.degree(m) for m in p}) <= 1

    def critical_pairs_resolve(self) -> bool:
        """Every overlap of two leading monomials reduces to one normal form."""
        n = self.nvars
        for r1, r2 in itertools.combinations_with_replacement(self.rules, 2):
            l1, l2 = r1.leading(n), r2.leading(n)
            overlap = tuple(max(a, b) for a, b in zip(l1, l2))
            if self.reduce_with_first(overlap, r1) != self.reduce_with_first(overlap, r2):
                return False
        return True

    def normal_monomials(self, max_height: int) -> list[tuple]:
        """All normal-form monomials of height at most ``max_height``,
        ordered by height then lexicographically."""
        hs = self.group.height
        bounds = [max_height // h for h in hs]
        out = []
        for m in itertools.product(*(range(b + 1) for b in bounds)):
            if self.height(m) <= max_height and self.is_normal(m):
                out.append(m)
        out.sort(key=lambda m: (self.height(m), m))
        return out

    def fmt(self, p: Poly) -> str:
        F = self.field
        if not p:
            return "0"
        terms = []
        for m in sorted(p):
            mono = "*".join(f"{g}^{e}" if e > 1 else g for g, e in zip(self.gens, m) if e) or "1"
            terms.append(f"{F.fmt(p[m])}*{mono}")
        return " + ".join(terms)


def _field_constant(F: Field, coeffs, label: str):
    roots = F.roots(coeffs)
    if not roots:
        raise FieldError(f"the field {F} does not contain {label}")
    return roots[0].raw


def sqrt_minus_one(F: Field):
    return _field_constant(F, [1, 0, 1], "a square root of -1")


def epsilon(F: Field):
    """A root of ``t^2 - t + 1``."""
    return _field_constant(F, [1, -1, 1], "a root of t^2 - t + 1")


TYPES = ("2,2,2,2", "3,3,3", "4,4,2", "6,3,2")


def coordinate_algebra(kind: str, F: Field, lam=None) -> GradedPresentation:
    """``S(2,2,2,2; lam)``, ``S(3,3,3)``, ``S(4,4,2)`` or ``S(6,3,2)``."""
    kind = kind.replace(" ", "")
    one, neg = F.one_raw, F.neg(F.one_raw)
    if kind == "2,2,2,2":
        if lam is None:
            raise ValueError("type 2,2,2,2 needs a parameter")
        lam = F.coerce(lam)
        if F.is_zero(lam) or lam == one:
            raise ValueError("parameter must differ from 0 and 1")
        L = GradingGroup((2, 2, 2, 2))
        rules = [Rule(2, 2, {(0, 2, 0, 0): one, (2, 0, 0, 0): neg}),
                 Rule(3, 2, {(0, 2, 0, 0): one, (2, 0, 0, 0): F.neg(lam)})]
        return GradedPresentation(f"S(2,2,2,2;{F.fmt(lam)})", F, L, ["x1", "x2", "x3", "x4"], rules)
    if kind == "3,3,3":
        L = GradingGroup((3, 3, 3))
        rules = [Rule(2, 3, {(0, 3, 0): one, (3, 0, 0): neg})]
        return GradedPresentation("S(3,3,3)", F, L, ["y1", "y2", "y3"], rules)
    if kind == "4,4,2":
        L = GradingGroup((4, 4, 2))
        rules = [Rule(2, 2, {(0, 4, 0): one, (4, 0, 0): neg})]
        return GradedPresentation("S(4,4,2)", F, L, ["z1", "z2", "z3"], rules)
    if kind == "6,3,2":
        L = GradingGroup((6, 3, 2))
        rules = [Rule(2, 2, {(0, 3, 0): one, (6, 0, 0): neg})]
        return GradedPresentation("S(6,3,2)", F, L, ["u1", "u2", "u3"], rules)
    raise ValueError(f"unknown tubular type {kind!r}; expected one of {', '.join(TYPES)}")


# ---------------------------------------------------------------------------
# truncations


@dataclass
class Truncation:
    """Normal-form monomials up to a height bound and their products.

    Products whose height exceeds the bound are listed in ``overflow``
    instead of being dropped.
    """

    presentation: GradedPresentation
    max_height: int
    basis: list[tuple]
    index: dict
    table: dict
    overflow: set

    def components(self) -> dict:
        out: dict = {}
        for m in self.basis:
            out.setdefault(self.presentation.degree(m), []).append(m)
        return out

    def component(self, degree) -> list[tuple]:
        d = self.presentation.group.canonical(degree)
        return [m for m in self.basis if self.presentation.degree(m) == d]

    def multiply(self, p: Poly, q: Poly) -> Poly:
        S = self.presentation
        return S.reduce(_pmul(S.field, p, q))

    def check(self) -> Report:
        S = self.presentation
        rep = Report(f"truncation {S.name}")
        rep.add("relations_homogeneous", all(S.is_homogeneous(r) for r in S.relations()))
        rep.add("critical_pairs_resolve", S.critical_pairs_resolve())
        bad_deg = [[list(a), list(b)] for (a, b), p in self.table.items()
                   if any(S.degree(m) != S.degree(_mono_mul(a, b)) for m in p)]
        rep.add("degree_additivity", not bad_deg, {"failing": bad_deg[:3]} if bad_deg else None)
        rep.add("degree_zero_is_k", self.component(S.group.zero) == [tuple(0 for _ in S.gens)])
        bad = 0
        cases = 0
        hs = {m: S.height(m) for m in self.basis}
        # basis is sorted by height, so each inner loop can stop early
        triples = ((a, b, c) for a in self.basis
                   for b in itertools.takewhile(lambda b: hs[a] + hs[b] <= self.max_height, self.basis)
                   for c in itertools.takewhile(lambda c: hs[a] + hs[b] + hs[c] <= self.max_height, self.basis))
        for a, b, c in triples:
            cases += 1
            left = self.multiply(self.table[(a, b)], {c: S.field.one_raw})
            right = self.multiply({a: S.field.one_raw}, self.table[(b, c)])
            if left != right:
                bad += 1
        rep.add("associative", bad == 0, {"cases": cases, "failed": bad})
        rep.data["dim"] = len(self.basis)
        rep.data["overflow_pairs"] = len(self.overflow)
        return rep


def coordinate_algebra_truncation(S: GradedPresentation, bound: int = 8) -> Truncation:
    """Normal forms with height at most ``bound`` times the smallest generator height."""
    max_height = bound * min(S.group.height)
    basis = S.normal_monomials(max_height)
    index = {m: i for i, m in enumerate(basis)}
    table, overflow = {}, set()
    for a in basis:
        for b in basis:
            if S.height(a) + S.height(b) > max_height:
                overflow.add((a, b))
            else:
                table[(a, b)] = S.reduce_monomial(_mono_mul(a, b))
    return Truncation(S, max_height, basis, index, table, overflow)


def component_dimension_oracle(S: GradedPresentation, degree, max_height: int) -> int:
    """``dim S_l`` as (monomials of degree ``l`` in the free polynomial ring)
    minus (rank of the degree-``l`` part of the relation ideal), by linear
    algebra rather than rewriting."""
    L, F = S.group, S.field
    target = L.canonical(degree)
    bounds = [max_height // h for h in L.height]
    allm = [m for m in itertools.product(*(range(b + 1) for b in bounds)) if S.height(m) <= max_height]
    mons = [m for m in allm if L.degree_of(m) == target]
    pos = {m: i for i, m in enumerate(mons)}
    rows = []
    for rel in S.relations():
        lead = next(iter(rel))
        for m in allm:
            if L.degree_of(_mono_mul(m, lead)) != target or S.height(_mono_mul(m, lead)) > max_height:
                continue
            row = [F.zero_raw] * len(mons)
            for mm, v in rel.items():
                row[pos[_mono_mul(m, mm)]] = v
            rows.append(row)
    if not rows:
        return len(mons)
    return len(mons) - Matrix(F, rows, len(rows), len(mons)).rank()


# ---------------------------------------------------------------------------
# graded automorphisms


@dataclass
class GradedAutomorphismDatum:
    """``x_i -> scalars[i] * x_{perm[i]}``; ``psi`` permutes the generator
    degrees the same way."""

    name: str
    presentation: GradedPresentation
    perm: tuple[int, ...]
    scalars: tuple

    def apply_monomial(self, m: tuple) -> Poly:
        F = self.presentation.field
        coeff = F.one_raw
        out = [0] * len(m)
        for i, e in enumerate(m):
            coeff = F.mul(coeff, F.pow_raw(self.scalars[i], e))
            out[self.perm[i]] += e
        return {tuple(out): coeff}

    def apply(self, p: Poly) -> Poly:
        F = self.presentation.field
        out: Poly = {}
        for m, v in p.items():
            _acc(F, out, self.apply_monomial(m), v)
        return self.presentation.reduce(out)

    def psi(self, v: Sequence[int]) -> tuple:
        """``psi`` on an exponent vector, returned in normal form."""
        out = [0] * len(v)
        for i, e in enumerate(v):
            out[self.perm[i]] += e
        return self.presentation.group.normal_form(out)

    def compose(self, other: "GradedAutomorphismDatum") -> "GradedAutomorphismDatum":
        """``self o other``."""
        F = self.presentation.field
        perm = tuple(self.perm[other.perm[i]] for i in range(len(self.perm)))
        scalars = tuple(F.mul(other.scalars[i], self.scalars[other.perm[i]]) for i in range(len(self.perm)))
        return GradedAutomorphismDatum(f"{self.name}*{other.name}", self.presentation, perm, scalars)

    def power(self, n: int) -> "GradedAutomorphismDatum":
        F = self.presentation.field
        out = GradedAutomorphismDatum(f"{self.name}^0", self.presentation, tuple(range(len(self.perm))),
                                      tuple(F.one_raw for _ in self.perm))
        for _ in range(n):
            out = self.compose(out)
        return GradedAutomorphismDatum(f"{self.name}^{n}", self.presentation, out.perm, out.scalars)

    def is_scaling(self) -> bool:
        return all(p == i for i, p in enumerate(self.perm))


def validate_graded_automorphism(d: GradedAutomorphismDatum, truncation: Truncation | None = None) -> Report:
    S = d.presentation
    F, L = S.field, S.group
    n = S.nvars
    rep = Report(f"graded-automorphism {d.name} on {S.name}")
    rep.add("invertible_substitution",
            sorted(d.perm) == list(range(n)) and all(not F.is_zero(s) for s in d.scalars))
    psi_ok = all(L.normal_form([0] * n) == d.psi(row) for row in L.relations)
    rep.add("psi_well_defined_automorphism", psi_ok)
    unit = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    rep.add("degree_compatible", all(
        all(S.degree(m) == d.psi(unit[i]) for m in d.apply({unit[i]: F.one_raw})) for i in range(n)))
    images = [d.apply(r) for r in S.relations()]
    rep.add("relations_preserved", all(not p for p in images),
            None if all(not p for p in images) else {"residues": [S.fmt(p) for p in images]})
    if truncation is not None:
        T = truncation
        ok_deg = all(S.degree(mm) == d.psi(m) for m in T.basis for mm in d.apply({m: F.one_raw}))
        rep.add("truncation_degrees", ok_deg)
        cols = []
        for m in T.basis:
            img = d.apply({m: F.one_raw})
            col = [F.zero_raw] * len(T.basis)
            for mm, v in img.items():
                col[T.index[mm]] = v
            cols.append(col)
        M = Matrix(F, [list(r) for r in zip(*cols)], len(T.basis), len(T.basis))
        rep.add("truncation_bijective", M.is_invertible())
        bad = [(a, b) for (a, b), p in T.table.items()
               if d.apply(p) != T.multiply(d.apply({a: F.one_raw}), d.apply({b: F.one_raw}))]
        rep.add("truncation_multiplicative", not bad, {"pairs": len(T.table), "failed": len(bad)})
    return rep


def table1(F: Field) -> list[GradedAutomorphismDatum]:
    """The three graded automorphisms ``g_1``, ``g_2``, ``g_3``."""
    i = sqrt_minus_one(F)
    e = epsilon(F)
    one = F.one_raw
    S1 = coordinate_algebra("2,2,2,2", F, F.neg(one))
    S2 = coordinate_algebra("2,2,2,2", F, e)
    S3 = coordinate_algebra("3,3,3", F)
    return [
        GradedAutomorphismDatum("g1", S1, (0, 1, 3, 2), (i, one, one, one)),
        GradedAutomorphismDatum("g2", S2, (1, 2, 0, 3), (one, one, i, F.mul(i, e))),
        GradedAutomorphismDatum("g3", S3, (1, 0, 2), (one, one, e)),
    ]


def scaling_order(d: GradedAutomorphismDatum, limit: int = 24):
    """Smallest ``m`` with ``d^m`` a scaling by a well-defined character of
    ``L``, together with that power."""
    S = d.presentation
    for m in range(1, limit + 1):
        p = d.power(m)
        if p.is_scaling() and S.group.character_is_well_defined(p.scalars, S.field):
            return m, p
    raise ValueError(f"no power of {d.name} up to {limit} is a scaling character")


# ---------------------------------------------------------------------------
# the window algebra and the induced cyclic action


@dataclass
class WindowAlgebra:
    """``End(sum_l O(l))`` over the window ``{j x_i} u {c}`` in composition order."""

    presentation: GradedPresentation
    window: list[tuple]
    vectors: list[tuple]
    basis: list[tuple]
    algebra: Algebra


def window_vectors(L: GradingGroup) -> list[tuple]:
    t = L.ngens
    out = [tuple([0] * t)]
    for i, p in enumerate(L.weights):
        for j in range(1, p):
            out.append(tuple(j if k == i else 0 for k in range(t)))
    c = [0] * t
    c[0] = L.weights[0]
    out.append(tuple(c))
    return out


def window_algebra(S: GradedPresentation) -> WindowAlgebra:
    L, F = S.group, S.field
    vecs = window_vectors(L)
    window = [L.normal_form(v) for v in vecs]
    heights = [L.height_of(v) for v in vecs]
    mons = S.normal_monomials(max(heights))
    by_degree: dict = {}
    for m in mons:
        by_degree.setdefault(S.degree(m), []).append(m)
    basis = []
    for s, ls in enumerate(window):
        for t, lt in enumerate(window):
            if heights[t] < heights[s]:
                continue
            for m in by_degree.get(L.sub(lt, ls), []):
                basis.append((s, t, m))
    pos = {b: i for i, b in enumerate(basis)}
    n = len(basis)
    zero_col = Matrix.zeros(F, n, 1)
    products = []
    for (s1, t1, m1) in basis:
        row = []
        for (s2, t2, m2) in basis:
            # b1 o b2 is defined when b2 ends where b1 starts
            if t2 != s1:
                row.append(zero_col)
                continue
            col = [[F.zero_raw] for _ in range(n)]
            for m, v in S.reduce_monomial(_mono_mul(m1, m2)).items():
                col[pos[(s2, t1, m)]][0] = v
            row.append(Matrix(F, col, n, 1))
        products.append(row)
    ident = tuple(0 for _ in S.gens)
    unit = Matrix(F, [[F.one_raw if (s == t and m == ident) else F.zero_raw] for (s, t, m) in basis], n, 1)
    names = [f"{S.fmt({m: F.one_raw})}:{s}->{t}" for (s, t, m) in basis]
    return WindowAlgebra(S, window, vecs, basis, Algebra(F, products, unit, names))


def window_automorphism(W: WindowAlgebra, d: GradedAutomorphismDatum) -> AlgebraMap:
    S, A = W.presentation, W.algebra
    F = S.field
    slot = {l: i for i, l in enumerate(W.window)}
    obj = [slot[d.psi(v)] for v in W.vectors]
    pos = {b: i for i, b in enumerate(W.basis)}
    n = len(W.basis)
    rows = [[F.zero_raw] * n for _ in range(n)]
    for j, (s, t, m) in enumerate(W.basis):
        for mm, v in d.apply({m: F.one_raw}).items():
            rows[pos[(obj[s], obj[t], mm)]][j] = v
    return AlgebraMap(A, A, Matrix(F, rows, n, n))


def window_scaling_unit(W: WindowAlgebra, gamma: Sequence) -> Matrix:
    """``sum_l gamma(l) e_l``."""
    F = W.presentation.field
    vals = []
    for v in W.vectors:
        x = F.one_raw
        for g, e in zip(gamma, v):
            x = F.mul(x, F.pow_raw(g, e))
        vals.append(x)
    ident = tuple(0 for _ in W.presentation.gens)
    return Matrix(F, [[vals[s] if (s == t and m == ident) else F.zero_raw] for (s, t, m) in W.basis],
                  len(W.basis), 1)


def compatible_pair_from_graded(d: GradedAutomorphismDatum) -> tuple[CompatiblePair, WindowAlgebra, int, tuple]:
    m, p = scaling_order(d)
    W = window_algebra(d.presentation)
    sigma = window_automorphism(W, d)
    a = window_scaling_unit(W, p.scalars)
    return CompatiblePair(sigma, a, m), W, m, p.scalars


def table1_compatible_pairs(F: Field, bound: int = 8) -> tuple[Report, dict]:
    """Validate ``g_1, g_2, g_3`` on truncations, find their scaling powers
    and emit the induced cyclic weak actions."""
    rep = Report("table1")
    actions = {}
    truncations: dict = {}
    for d in table1(F):
        S = d.presentation
        if S.name not in truncations:
            truncations[S.name] = coordinate_algebra_truncation(S, bound)
        T = truncations[S.name]
        rep.extend(T.check(), f"{d.name}/{S.name}")
        rep.extend(validate_graded_automorphism(d, T), d.name)
        pair, W, m, gamma = compatible_pair_from_graded(d)
        rep.add(f"{d.name}/character_well_defined", S.group.character_is_well_defined(gamma, F))
        rep.extend(pair.validate(), f"{d.name}/pair")
        weak = induced_cyclic_action(pair)
        rep.extend(weak.validate(), f"{d.name}/weak_action")
        rep.data[d.name] = {
            "algebra": S.name,
            "order": m,
            "gamma": [F.to_json(g) for g in gamma],
            "window_dim": W.algebra.dim,
        }
        actions[d.name] = weak
    rep.data["constants"] = {"sqrt_minus_one": F.to_json(sqrt_minus_one(F)), "epsilon": F.to_json(epsilon(F))}
    return rep, actions


def default_field() -> Field:
    return PrimeField(13)

"""Weak actions of finite abelian groups on algebras and the induced actions
on module categories.

A weak action ``(rho, c)`` of ``G`` on ``A`` assigns an automorphism
``rho(g)`` to each element and a unit ``c(g, h)`` to each pair, subject to

* ``rho(gh)(x) = c(g,h)^-1 rho(g)(rho(h)(x)) c(g,h)``
* ``c(g,h) c(gh,k) = rho(g)(c(h,k)) c(g,hk)``.

On right modules it induces ``F_g = twist by rho(g^-1)`` with
``(eps_{g,h})_M (m) = m . c(h^-1, g^-1)``.

Functors here are composites of twists, which act as the identity on
morphism matrices. A natural transformation is evaluated on concrete probe
modules, so identities between natural transformations are checked as exact
matrix equalities on every probe.
"""
from __future__ import annotations

import itertools
from typing import Callable, Iterable, Mapping, Sequence

from .abgroup import FinAbGroup, GroupElement
from .algebra import (DEFAULT_BOUND, Algebra, AlgebraMap, ModuleRep, algebra_from_matrices, find_unit_in_span,
                      hom_space, is_module_morphism)
from .report import Report
from .scalar import Field, Matrix, field_from_json, lincomb, nth_root


# ---------------------------------------------------------------------------
# functors and natural transformations on probes


class Functor:
    """Composite of twist functors, outermost first."""

    def __init__(self, maps: Sequence[AlgebraMap] = (), label: str = "Id"):
        self.maps = tuple(maps)
        self.label = label
        self._cache: dict = {}

    def __call__(self, X: ModuleRep) -> ModuleRep:
        hit = self._cache.get(X)
        if hit is None:
            hit = X
            for sigma in reversed(self.maps):
                hit = hit.twist(sigma)
            self._cache[X] = hit
        return hit

    def __mul__(self, other: "Functor") -> "Functor":
        """``self`` after ``other``."""
        if not self.maps:
            return other
        if not other.maps:
            return self
        return Functor(self.maps + other.maps, f"{self.label}{other.label}")

    def __repr__(self):
        return f"Functor({self.label})"


class Nat:
    """Natural transformation between twist composites, given by components."""

    def __init__(self, source: Functor, target: Functor, component: Callable[[ModuleRep], Matrix], label: str = ""):
        self.source = source
        self.target = target
        self._component = component
        self.label = label
        self._cache: dict = {}

    def at(self, X: ModuleRep) -> Matrix:
        hit = self._cache.get(X)
        if hit is None:
            hit = self._component(X)
            self._cache[X] = hit
        return hit

    @classmethod
    def identity(cls, F: Functor) -> "Nat":
        return cls(F, F, lambda X: Matrix.identity(X.field, X.dim), f"1_{F.label}")

    @classmethod
    def from_element(cls, a: Matrix, source: Functor, target: Functor, label: str = "") -> "Nat":
        """``m -> m . a`` using the untwisted action on the argument."""
        return cls(source, target, lambda X: X.act(a), label)

    def __matmul__(self, other: "Nat") -> "Nat":
        """Vertical composite ``self o other``."""
        return Nat(other.source, self.target, lambda X: self.at(X) @ other.at(X), f"({self.label} o {other.label})")

    def whisker_right(self, F: Functor) -> "Nat":
        """``self F``: component at ``X`` is ``self`` at ``F(X)``."""
        return Nat(self.source * F, self.target * F, lambda X: self.at(F(X)), f"{self.label}{F.label}")

    def whisker_left(self, F: Functor) -> "Nat":
        """``F self``: twists do not change morphism matrices."""
        return Nat(F * self.source, F * self.target, self.at, f"{F.label}{self.label}")

    def inverse(self) -> "Nat":
        return Nat(self.target, self.source, lambda X: self.at(X).inverse(), f"{self.label}^-1")

    def scaled(self, s) -> "Nat":
        return Nat(self.source, self.target, lambda X: self.at(X) * s, f"{s}*{self.label}")

    def __repr__(self):
        return f"Nat({self.label}: {self.source.label} -> {self.target.label})"


def nats_agree(a: Nat, b: Nat, probes: Iterable[ModuleRep]) -> bool:
    """Same source and target objects and equal components on every probe."""
    for X in probes:
        if a.source(X) != b.source(X) or a.target(X) != b.target(X) or a.at(X) != b.at(X):
            return False
    return True


def is_natural_iso_on(a: Nat, probes: Sequence[ModuleRep]) -> bool:
    """Components are invertible module maps, natural for probe morphisms."""
    for X in probes:
        f = a.at(X)
        if not is_module_morphism(f, a.source(X), a.target(X)) or not f.is_invertible():
            return False
    for X in probes:
        for Y in probes:
            for phi in hom_space(X, Y):
                # twists act on morphisms as the identity
                if a.at(Y) @ phi != phi @ a.at(X):
                    return False
    return True


# ---------------------------------------------------------------------------
# weak actions


class WeakAction:
    def __init__(self, group: FinAbGroup, algebra: Algebra, rho: Mapping[GroupElement, AlgebraMap],
                 c: Mapping[tuple, Matrix]):
        self.group = group
        self.algebra = algebra
        self.rho = dict(rho)
        self.c = dict(c)

    @property
    def field(self) -> Field:
        return self.algebra.field

    @classmethod
    def trivial(cls, group: FinAbGroup, A: Algebra) -> "WeakAction":
        ident = AlgebraMap.identity(A)
        return cls(group, A, {g: ident for g in group.elements},
                   {(g, h): A.unit for g in group.elements for h in group.elements})

    @classmethod
    def strict(cls, group: FinAbGroup, A: Algebra, rho: Mapping) -> "WeakAction":
        return cls(group, A, rho, {(g, h): A.unit for g in group.elements for h in group.elements})

    def validate(self) -> Report:
        G, A = self.group, self.algebra
        rep = Report("validate-action")
        els = G.elements
        rep.add("rho_complete", all(g in self.rho for g in els))
        rep.add("c_complete", all((g, h) in self.c for g in els for h in els))
        if not rep.ok:
            return rep
        rep.add("rho_automorphisms", all(self.rho[g].is_automorphism() for g in els))
        rep.add("c_units", all(A.is_unit(v) for v in self.c.values()))
        if not rep.ok:
            return rep
        bad1 = []
        for g in els:
            for h in els:
                cc = self.c[(g, h)]
                rhs = AlgebraMap.conjugation(A, A.inverse(cc)) @ self.rho[g] @ self.rho[h]
                if rhs != self.rho[G.mul(g, h)]:
                    bad1.append([G.key(g), G.key(h)])
        rep.add("rho_product_up_to_conjugation", not bad1, {"failing": bad1[:10]} if bad1 else None)
        bad2 = []
        for g in els:
            for h in els:
                for k in els:
                    lhs = A.mul(self.c[(g, h)], self.c[(G.mul(g, h), k)])
                    rhs = A.mul(self.rho[g](self.c[(h, k)]), self.c[(g, G.mul(h, k))])
                    if lhs != rhs:
                        bad2.append([G.key(g), G.key(h), G.key(k)])
        rep.add("c_twisted_cocycle", not bad2, {"failing": bad2[:10]} if bad2 else None)
        if rep.ok:
            e = G.identity
            cee = self.c[(e, e)]
            rep.add("rho_e_is_conjugation_by_c_ee", self.rho[e] == AlgebraMap.conjugation(A, cee))
            rep.add("c_e_k_equals_c_ee", all(self.c[(e, k)] == cee for k in els))
            rep.add("c_g_e_equals_rho_g_c_ee", all(self.c[(g, e)] == self.rho[g](cee) for g in els))
        return rep

    def pushforward(self, f: AlgebraMap) -> "WeakAction":
        """Transport along an algebra isomorphism ``f: A -> B``."""
        finv = f.inverse()
        rho = {g: f @ r @ finv for g, r in self.rho.items()}
        c = {k: f(v) for k, v in self.c.items()}
        return WeakAction(self.group, f.target, rho, c)

    def module_action(self) -> "ModuleCategoryAction":
        return ModuleCategoryAction(self)

    def to_json(self) -> dict:
        G, F = self.group, self.field
        return {
            "field": F.spec(),
            "group": G.to_json(),
            "algebra": self.algebra.to_json(),
            "rho": {G.key(g): self.rho[g].matrix.to_json() for g in G.elements},
            "c": [[G.key(g), G.key(h), [F.to_json(v) for v in self.c[(g, h)].flat()]]
                  for g in G.elements for h in G.elements],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "WeakAction":
        F = field_from_json(obj["field"])
        G = FinAbGroup.from_json(obj["group"])
        A = Algebra.from_json(obj["algebra"], F)
        rho = {}
        for key, mat in obj["rho"].items():
            rho[G.coerce(key)] = AlgebraMap(A, A, Matrix.from_json(F, mat))
        c = {(g, h): A.unit for g in G.elements for h in G.elements}
        for g, h, coeffs in obj.get("c", []):
            c[(G.coerce(g), G.coerce(h))] = Matrix(F, [[F.from_json(v)] for v in coeffs], A.dim, 1)
        return cls(G, A, rho, c)


def crossed_systems_equivalent(w1: WeakAction, w2: WeakAction, f: AlgebraMap, delta: Mapping) -> bool:
    """Is ``f_*(w1)`` isomorphic to ``w2`` via ``delta: G -> B^*``?

    ``rho2(g)(x) = delta(g)^-1 rho(g)(x) delta(g)`` and
    ``c2(g,h) = delta(g)^-1 rho(g)(delta(h))^-1 c(g,h) delta(gh)``.
    """
    B = f.target
    G = w1.group
    pushed = w1.pushforward(f)
    for g in G.elements:
        d = delta[g]
        if not B.is_unit(d):
            return False
        if w2.rho[g] != AlgebraMap.conjugation(B, B.inverse(d)) @ pushed.rho[g]:
            return False
    for g in G.elements:
        for h in G.elements:
            expect = B.prod(B.inverse(delta[g]), B.inverse(pushed.rho[g](delta[h])), pushed.c[(g, h)],
                            delta[G.mul(g, h)])
            if expect != w2.c[(g, h)]:
                return False
    return True


def algebra_isomorphisms(A: Algebra, B: Algebra, bound: int = 200_000) -> list[AlgebraMap]:
    """All algebra isomorphisms ``A -> B`` by exhaustive search (finite fields)."""
    F = A.field
    if A.dim != B.dim:
        return []
    n = A.dim
    if not F.is_finite or F.size ** (n * (n - 1)) > bound:
        raise ValueError("isomorphism enumeration exceeds the search bound")
    elements = [Matrix.column(F, list(v)) for v in itertools.product(range(F.size), repeat=n)]
    out = []
    for cols in itertools.product(elements, repeat=n):
        f = AlgebraMap(A, B, Matrix.hstack_all(F, list(cols), n))
        if f(A.unit) != B.unit:
            continue
        if f.matrix.is_invertible() and f.is_homomorphism():
            out.append(f)
    return out


def units(A: Algebra) -> list[Matrix]:
    F = A.field
    out = []
    for v in itertools.product(range(F.size), repeat=A.dim):
        x = Matrix.column(F, list(v))
        if A.is_unit(x):
            out.append(x)
    return out


def find_crossed_equivalence(w1: WeakAction, w2: WeakAction, bound: int = 200_000):
    """Exhaustive search for ``(f, delta)``; returns a witness or ``None``."""
    B = w2.algebra
    us = units(B)
    G = w1.group
    if len(us) ** G.order > bound:
        raise ValueError("unit search exceeds the bound")
    for f in algebra_isomorphisms(w1.algebra, B, bound):
        for choice in itertools.product(us, repeat=G.order):
            delta = dict(zip(G.elements, choice))
            if crossed_systems_equivalent(w1, w2, f, delta):
                return f, delta
    return None


# ---------------------------------------------------------------------------
# induced action on modules


class ModuleCategoryAction:
    """The ``G``-action on right ``A``-modules determined by a weak action."""

    def __init__(self, weak: WeakAction):
        self.weak = weak
        self.group = weak.group
        self.algebra = weak.algebra
        self._functors: dict = {}

    @property
    def field(self) -> Field:
        return self.algebra.field

    def F(self, g: GroupElement) -> Functor:
        hit = self._functors.get(g)
        if hit is None:
            hit = Functor((self.weak.rho[self.group.inv(g)],), f"F[{self.group.key(g)}]")
            self._functors[g] = hit
        return hit

    def word(self, gs: Sequence[GroupElement]) -> Functor:
        out = Functor()
        for g in gs:
            out = out * self.F(g)
        return out

    def power(self, g: GroupElement, n: int) -> Functor:
        return self.word([g] * n)

    def eps(self, g: GroupElement, h: GroupElement) -> Nat:
        G = self.group
        c = self.weak.c[(G.inv(h), G.inv(g))]
        return Nat.from_element(c, self.F(g) * self.F(h), self.F(G.mul(g, h)),
                                f"eps[{G.key(g)},{G.key(h)}]")

    def unit(self) -> Nat:
        e = self.group.identity
        return Nat.from_element(self.weak.c[(e, e)], self.F(e), Functor(), "u")

    def eps_multi(self, gs: Sequence[GroupElement]) -> Nat:
        """``eps_{g_1,...,g_n}: F_{g_1}...F_{g_n} -> F_{g_1...g_n}`` for n >= 1."""
        gs = list(gs)
        if len(gs) == 1:
            return Nat.identity(self.F(gs[0]))
        if len(gs) == 2:
            return self.eps(gs[0], gs[1])
        head = self.group.prod(gs[:-1])
        return self.eps(head, gs[-1]) @ self.eps_multi(gs[:-1]).whisker_right(self.F(gs[-1]))

    def eps_power(self, g: GroupElement, n: int) -> Nat:
        """``eps_g^{(n)}: F_g^n -> F_{g^n}`` with ``eps^{(0)} = u^-1``."""
        if n == 0:
            return self.unit().inverse()
        return self.eps_multi([g] * n)

    def default_probes(self, *, seed: int = 0) -> list[ModuleRep]:
        """Simple modules, the regular module, and all their twists."""
        from .decompose import BlockData, SearchUndetermined
        A = self.algebra
        base = [ModuleRep.regular(A)]
        try:
            base += BlockData(A, seed=seed).simples
        except SearchUndetermined:
            # no split simples over this field; fall back to the other probes
            pass
        out: list[ModuleRep] = []
        for X in base:
            for g in self.group.elements:
                Y = self.F(g)(X)
                if Y not in out:
                    out.append(Y)
        return out


# ---------------------------------------------------------------------------
# identity suite


def coherence_suite(act: ModuleCategoryAction, probes: Sequence[ModuleRep], max_n: int = 4) -> Report:
    """Unit laws, generalised cocycle identities and power identities of the
    induced action, checked on the given probes."""
    G = act.group
    els = G.elements
    e = G.identity
    rep = Report("coherence-identities")
    u = act.unit()
    F = act.F

    def tally(name, cases):
        total = failed = 0
        first = None
        for label, lhs, rhs in cases:
            total += 1
            if not nats_agree(lhs, rhs, probes):
                failed += 1
                first = first or label
        rep.add(name, failed == 0, {"cases": total, "failed": failed, **({"first_failure": first} if first else {})})

    rep.add("eps_natural_isos", all(is_natural_iso_on(act.eps(g, h), probes) for g in els for h in els))
    rep.add("unit_defined_by_eps_ee", nats_agree(u.whisker_left(F(e)), act.eps(e, e), probes))

    tally("two_cocycle", (
        ((g, h, k), act.eps(G.mul(g, h), k) @ act.eps(g, h).whisker_right(F(k)),
         act.eps(g, G.mul(h, k)) @ act.eps(h, k).whisker_left(F(g)))
        for g in els for h in els for k in els))
    tally("unit_middle", (((g, k), act.eps(g, e).whisker_right(F(k)), act.eps(e, k).whisker_left(F(g)))
                         for g in els for k in els))
    tally("left_unit", (((k,), act.eps(e, k), u.whisker_right(F(k))) for k in els))
    tally("right_unit", (((g,), act.eps(g, e), u.whisker_left(F(g))) for g in els))

    def bracketing_cases():
        for n in range(3, max_n + 1):
            for gs in itertools.product(els, repeat=n):
                lhs = act.eps_multi(gs)
                for m in range(1, n):
                    for i in range(2, n - m + 1):
                        merged = list(gs[:m]) + [G.prod(gs[m:m + i])] + list(gs[m + i:])
                        inner = act.eps_multi(gs[m:m + i])
                        inner = inner.whisker_right(act.word(gs[m + i:])).whisker_left(act.word(gs[:m]))
                        yield (tuple(map(G.key, gs)), m, i), lhs, act.eps_multi(merged) @ inner

    tally("bracketing_independence", bracketing_cases())

    def power_rhs(g, i, j):
        gi = G.power(g, i)
        return (act.eps(gi, G.power(g, j))
                @ act.eps_power(g, j).whisker_left(F(gi))
                @ act.eps_power(g, i).whisker_right(act.power(g, j)))

    def power_split_cases():
        for g in els:
            d = G.element_order(g)
            for i in range(0, d + 1):
                for j in range(0, d + 1):
                    yield (G.key(g), i, j), act.eps_power(g, i + j), power_rhs(g, i, j)

    def power_wrap_cases():
        for g in els:
            d = G.element_order(g)
            for i in range(0, d + 1):
                for j in range(0, d + 1):
                    if i + j < d:
                        continue
                    r = i + j - d
                    pre = act.power(g, r)
                    lhs = (act.eps_power(g, r) @ u.whisker_left(pre)
                           @ act.eps_power(g, d).whisker_left(pre))
                    yield (G.key(g), i, j), lhs, power_rhs(g, i, j)

    tally("power_splitting", power_split_cases())
    tally("power_wraparound", power_wrap_cases())
    rep.data["probes"] = len(probes)
    rep.data["max_n"] = max_n
    return rep


# ---------------------------------------------------------------------------
# crossed products


class CrossedProduct:
    """``A * G`` with basis ``b_i g`` ordered group-major."""

    def __init__(self, weak: WeakAction):
        self.weak = weak
        A, G = weak.algebra, weak.group
        F = A.field
        n = A.dim
        els = G.elements
        N = n * G.order
        self.dim = N
        idx = {g: k for k, g in enumerate(els)}

        def embed(r: Matrix, g) -> Matrix:
            vals = [F.zero_raw] * N
            off = idx[g] * n
            vals[off:off + n] = r.flat()
            return Matrix(F, [[v] for v in vals], N, 1)

        products = [[None] * N for _ in range(N)]
        for g in els:
            for i in range(n):
                for h in els:
                    rg = weak.rho[g]
                    cgh = weak.c[(g, h)]
                    for j in range(n):
                        r = A.prod(A.basis_element(i), rg(A.basis_element(j)), cgh)
                        products[idx[g] * n + i][idx[h] * n + j] = embed(r, G.mul(g, h))
        e = G.identity
        unit = embed(A.inverse(weak.c[(e, e)]), e)
        names = [f"{A.basis_names[i]}#{G.key(g)}" for g in els for i in range(n)]
        self.algebra = Algebra(F, products, unit, names)
        self._embed = embed

    def element(self, r: Matrix, g: GroupElement) -> Matrix:
        """``r g``."""
        return self._embed(r, g)

    def embed_base(self, r: Matrix) -> Matrix:
        """The multiplicative embedding ``r -> (r c(e,e)^-1) e``."""
        A = self.weak.algebra
        e = self.weak.group.identity
        return self._embed(A.mul(r, A.inverse(self.weak.c[(e, e)])), e)

    def verify(self) -> Report:
        rep = Report("crossed-product")
        A, G = self.weak.algebra, self.weak.group
        rep.add("dimension_law", self.dim == A.dim * G.order, {"dim": self.dim})
        rep.extend(self.algebra.validate())
        B = self.algebra
        emb = [self.embed_base(b) for b in A.basis]
        ok = all(B.mul(emb[i], emb[j]) == self.embed_base(A.products[i][j]) for i in range(A.dim) for j in range(A.dim))
        rep.add("base_embedding_multiplicative", ok)
        rep.add("identity_is_c_ee_inverse_e", self.embed_base(A.unit) == B.unit)
        return rep


def crossed_product(weak: WeakAction) -> Algebra:
    return CrossedProduct(weak).algebra


# ---------------------------------------------------------------------------
# cyclic actions and compatible pairs


class CompatiblePair:
    """An automorphism ``sigma`` and a unit ``a`` implementing ``c: F^d -> Id``
    for ``F = twist by sigma``; i.e. ``c_M(m) = m . a``. Compatibility means
    ``sigma(a) = a`` and ``sigma^d(x) = a x a^-1``."""

    def __init__(self, sigma: AlgebraMap, a: Matrix, d: int):
        self.sigma = sigma
        self.a = a
        self.d = d

    def validate(self) -> Report:
        A = self.sigma.source
        rep = Report("compatible-pair")
        rep.add("sigma_automorphism", self.sigma.is_automorphism())
        rep.add("a_unit", A.is_unit(self.a))
        if rep.ok:
            rep.add("sigma_fixes_a", self.sigma(self.a) == self.a)
            rep.add("sigma_d_is_conjugation", self.sigma.power(self.d) == AlgebraMap.conjugation(A, self.a))
        return rep

    def to_json(self) -> dict:
        F = self.sigma.source.field
        return {"sigma": self.sigma.matrix.to_json(), "a": [F.to_json(v) for v in self.a.flat()], "d": self.d}


def induced_cyclic_action(pair: CompatiblePair) -> WeakAction:
    """The ``C_d`` weak action whose module action has ``F_{g^i} = F^i`` for
    ``0 <= i < d`` and ``eps_{g^i, g^j}`` equal to ``c`` when ``i + j >= d``."""
    check = pair.validate()
    if not check.ok:
        raise ValueError("not a compatible pair: " + ", ".join(c.name for c in check.failures()))
    sigma, a, d = pair.sigma, pair.a, pair.d
    A = sigma.source
    G = FinAbGroup((d,))
    rho = {(j,): sigma.power((-j) % d) for j in range(d)}
    c = {}
    for s in range(d):
        for t in range(d):
            wrap = (-s) % d + (-t) % d >= d
            c[((s,), (t,))] = a if wrap else A.unit
    return WeakAction(G, A, rho, c)


def compatible_pair_from_action(act: ModuleCategoryAction, generator: GroupElement | None = None,
                                probes: Sequence[ModuleRep] | None = None) -> tuple[CompatiblePair, Report]:
    """``(F_g, u o eps_g^{(d)})`` for a cyclic group with generator ``g``."""
    G = act.group
    g = generator or G.cyclic_generator()
    if g is None:
        raise ValueError("group is not cyclic")
    d = G.element_order(g)
    if d != G.order:
        raise ValueError("element does not generate the group")
    A = act.algebra
    R = ModuleRep.regular(A)
    cnat = act.unit() @ act.eps_power(g, d)
    a = cnat.at(R) @ A.unit
    sigma = act.weak.rho[G.inv(g)]
    pair = CompatiblePair(sigma, a, d)
    probes = list(probes) if probes is not None else act.default_probes()
    rep = Report("cyclic-classify")
    rep.extend(pair.validate())
    rep.add("c_components_are_right_multiplication", all(cnat.at(X) == X.act(a) for X in probes))
    Fg = act.F(g)
    rep.add("Fc_equals_cF", nats_agree(cnat.whisker_left(Fg), cnat.whisker_right(Fg), probes))
    return pair, rep


def cyclic_round_trip(act: ModuleCategoryAction, pair: CompatiblePair, generator: GroupElement,
                      probes: Sequence[ModuleRep]) -> bool:
    """Check that ``delta_{g^i} = eps_g^{(i)}`` identifies the induced action
    from ``pair`` with ``act``."""
    G = act.group
    d = pair.d
    induced = induced_cyclic_action(pair).module_action()
    g = generator
    for i in range(d):
        for j in range(d):
            gi, gj = G.power(g, i), G.power(g, j)
            lhs = act.eps_power(g, (i + j) % d) @ induced.eps((i,), (j,))
            rhs = act.eps(gi, gj) @ (act.eps_power(g, j).whisker_left(act.F(gi))
                                     @ act.eps_power(g, i).whisker_right(induced.F((j,))))
            for X in probes:
                if lhs.at(X) != rhs.at(X) or lhs.source(X) != rhs.source(X) or lhs.target(X) != rhs.target(X):
                    return False
    return True


def is_d_compatible(A: Algebra, sigma: AlgebraMap, d: int, **kw) -> Matrix | None:
    """A unit ``a`` with ``sigma(a) = a`` and ``sigma^d(x) = a^-1 x a``, or ``None``."""
    sd = sigma.power(d)
    blocks = [A.right_matrix(sd(b)) - A.left_basis_matrices[i] for i, b in enumerate(A.basis)]
    blocks.append(sigma.matrix - Matrix.identity(A.field, A.dim))
    system = blocks[0]
    for b in blocks[1:]:
        system = system.vstack(b)
    return find_unit_in_span(A, system.nullspace(), **kw)


def root_hypotheses(F: Field, d: int) -> Report:
    """The two scalar conditions behind uniqueness of a compatible pair.

    Rescaling ``a`` by ``lam`` gives an equivalent cyclic action when ``lam``
    has a d-th root in ``k``; telling pairs apart needs primitive d-th roots
    of unity. Over ``F_p`` with ``d > 1`` at most one of the two holds, so any
    uniqueness statement is reported as conditional on the one that fails.
    """
    if d < 1:
        raise ValueError("d must be positive")
    rep = Report("root-hypotheses")
    if F.is_finite:
        every = all(nth_root(x, d) is not None for x in F.elements() if x)
    else:
        # a number field has non-d-th powers for every d > 1
        every = d == 1
    primitive = F.torsion_order % d == 0
    rep.data.update({"d": d, "every_element_has_dth_root": every, "has_primitive_dth_roots": primitive,
                     "uniqueness_conditional": not (every and primitive)})
    return rep


# ---------------------------------------------------------------------------
# crossed systems from stable modules


def endomorphism_algebra(M: ModuleRep) -> tuple[Algebra, list[Matrix]]:
    """``End_A(M)`` with multiplication given by composition ``a b = a o b``."""
    basis = hom_space(M, M)
    return algebra_from_matrices(M.field, basis), basis


def crossed_system_from_stable_module(act: ModuleCategoryAction, T: ModuleRep,
                                      alpha: Mapping[GroupElement, Matrix]) -> tuple[WeakAction, list[Matrix]]:
    """Weak action on ``R = End(T)`` from isomorphisms ``alpha_g: T -> F_g T``.

    ``rho(g)^-1(a) = alpha_{g^-1}^-1 F_{g^-1}(a) alpha_{g^-1}`` and ``c(g,h)`` is
    determined by ``F_{(gh)^-1}(c(g,h)) alpha_{(gh)^-1}
    = eps_{h^-1,g^-1} F_{h^-1}(alpha_{g^-1}) alpha_{h^-1}``.
    """
    G = act.group
    for g in G.elements:
        if not is_module_morphism(alpha[g], T, act.F(g)(T)) or not alpha[g].is_invertible():
            raise ValueError(f"alpha[{G.key(g)}] is not an isomorphism T -> F_g T")
    R, basis = endomorphism_algebra(T)
    F = R.field
    size = T.dim
    flat = Matrix(F, [[m.rows[r][c] for m in basis] for r in range(size) for c in range(size)], size * size, len(basis))

    def coords(X: Matrix) -> Matrix:
        sol = flat.solve(Matrix(F, [[X.rows[r][c]] for r in range(size) for c in range(size)], size * size, 1))
        if not sol.consistent:
            raise ValueError("map is not an endomorphism of T")
        return sol.particular

    def as_matrix(x: Matrix) -> Matrix:
        return lincomb(F, x.flat(), basis)

    rho = {}
    for g in G.elements:
        b = alpha[G.inv(g)]
        binv = b.inverse()
        cols = [coords(b @ m @ binv) for m in basis]
        rho[g] = AlgebraMap(R, R, Matrix.hstack_all(F, cols, R.dim))
    c = {}
    for g in G.elements:
        for h in G.elements:
            gh = G.mul(g, h)
            E = act.eps(G.inv(h), G.inv(g)).at(T)
            C = E @ alpha[G.inv(g)] @ alpha[G.inv(h)] @ alpha[G.inv(gh)].inverse()
            c[(g, h)] = coords(C)
    return WeakAction(G, R, rho, c), basis


def stable_isomorphisms(act: ModuleCategoryAction, T: ModuleRep, **kw) -> dict | None:
    """Isomorphisms ``T -> F_g T`` for every g, or ``None`` if ``T`` is not stable."""
    from .algebra import find_isomorphism
    out = {}
    for g in act.group.elements:
        f = find_isomorphism(T, act.F(g)(T), **kw)
        if f is None:
            return None
        out[g] = f
    return out


def weak_action_k0(weak: WeakAction, *, seed: int = 0, bound: int = DEFAULT_BOUND) -> dict:
    """``g.[P] = [twist(P, rho(g^-1))]`` on the generators of the group."""
    from .decompose import k0_action
    G = weak.group
    autos = {g: weak.rho[G.inv(g)] for g in G.generators}
    return k0_action(weak.algebra, autos, seed=seed, bound=bound)


def alpha_change_witness(act: ModuleCategoryAction, T: ModuleRep, alpha: Mapping, alpha2: Mapping):
    """``delta`` showing the crossed systems from ``alpha`` and ``alpha2`` are
    equivalent via the identity of ``End(T)``, or ``None``.

    With ``alpha2_g = alpha_g t_g`` the candidates are built from
    ``t_{g^-1}`` and its image under ``rho(g)``; each is verified exactly.
    """
    G = act.group
    w1, basis = crossed_system_from_stable_module(act, T, alpha)
    w2, _ = crossed_system_from_stable_module(act, T, alpha2)
    R = w1.algebra
    F = R.field
    size = T.dim
    flat = Matrix(F, [[m.rows[r][c] for m in basis] for r in range(size) for c in range(size)], size * size, len(basis))

    def coords(X: Matrix) -> Matrix:
        return flat.solve(Matrix(F, [[X.rows[r][c]] for r in range(size) for c in range(size)], size * size, 1)).particular

    t = {g: coords(alpha[g].inverse() @ alpha2[g]) for g in G.elements}
    ident = AlgebraMap.identity(R)
    candidates = [
        lambda g: R.inverse(w1.rho[g](t[G.inv(g)])),
        lambda g: w1.rho[g](t[G.inv(g)]),
        lambda g: t[G.inv(g)],
        lambda g: R.inverse(t[G.inv(g)]),
    ]
    for make in candidates:
        delta = {g: make(g) for g in G.elements}
        if crossed_systems_equivalent(w1, w2, ident, delta):
            return delta
    return None

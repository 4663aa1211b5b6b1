"""Equivariant modules for a module-category action, induction, the two
adjunctions between ``mod A`` and its equivariantization, and their monads.

All functorial statements are turned into matrix identities on explicit
objects. Twist functors act on morphisms as the identity, so ``F_g(f)`` is
just ``f`` with a different source and target.
"""
from __future__ import annotations

from typing import Mapping, Sequence

from .abgroup import GroupElement
from .action import CrossedProduct, ModuleCategoryAction
from .algebra import ModuleRep, direct_sum, hom_space, is_module_morphism
from .report import Report
from .scalar import Matrix, span_basis


class EquivariantModule:
    """A module ``X`` with isomorphisms ``alpha_g: X -> F_g(X)``."""

    def __init__(self, action: ModuleCategoryAction, module: ModuleRep, alpha: Mapping[GroupElement, Matrix]):
        self.action = action
        self.module = module
        self.alpha = dict(alpha)

    @property
    def dim(self) -> int:
        return self.module.dim

    @property
    def field(self):
        return self.module.field

    def alpha_inv(self, g) -> Matrix:
        return self.alpha[g].inverse()

    def validate(self) -> Report:
        act, X = self.action, self.module
        G = act.group
        rep = Report("validate-equivariant")
        bad_iso = [G.key(g) for g in G.elements
                   if not (is_module_morphism(self.alpha[g], X, act.F(g)(X)) and self.alpha[g].is_invertible())]
        rep.add("alpha_isomorphisms", not bad_iso, {"failing": bad_iso} if bad_iso else None)
        if not rep.ok:
            return rep
        bad = []
        for g in G.elements:
            for h in G.elements:
                rhs = act.eps(g, h).at(X) @ self.alpha[h] @ self.alpha[g]
                if rhs != self.alpha[G.mul(g, h)]:
                    bad.append([G.key(g), G.key(h)])
        rep.add("relations", not bad, {"failing": bad} if bad else None)
        rep.add("alpha_e_is_u_inverse", self.alpha[G.identity] == act.unit().at(X).inverse())
        return rep

    def twisted_by_character(self, chi) -> "EquivariantModule":
        """``(X, chi (x) alpha)`` with ``(chi (x) alpha)_g = chi(g^-1) alpha_g``."""
        G = self.action.group
        return EquivariantModule(self.action, self.module, {g: self.alpha[g] * chi(G.inv(g)) for g in G.elements})

    def __eq__(self, other):
        return (isinstance(other, EquivariantModule) and self.module == other.module
                and self.alpha == other.alpha)

    def __hash__(self):
        return hash((self.module, tuple(sorted(self.alpha.items()))))

    def to_json(self) -> dict:
        G = self.action.group
        return {"module": self.module.to_json(), "alpha": {G.key(g): self.alpha[g].to_json() for g in G.elements}}

    @classmethod
    def from_json(cls, action: ModuleCategoryAction, obj: dict) -> "EquivariantModule":
        X = ModuleRep.from_json(action.algebra, obj["module"])
        alpha = {action.group.coerce(k): Matrix.from_json(X.field, v) for k, v in obj["alpha"].items()}
        return cls(action, X, alpha)

    def __repr__(self):
        return f"EquivariantModule(dim={self.dim})"


def is_equivariant_morphism(f: Matrix, E1: EquivariantModule, E2: EquivariantModule) -> bool:
    """``beta_g f = F_g(f) alpha_g`` for every g, and ``f`` a module map."""
    if not is_module_morphism(f, E1.module, E2.module):
        return False
    return all(E2.alpha[g] @ f == f @ E1.alpha[g] for g in E1.action.group.elements)


def _order_inverse(act: ModuleCategoryAction):
    n = act.group.order
    F = act.field
    if F.characteristic and n % F.characteristic == 0:
        raise ValueError("|G| is zero in the field")
    return F(n).inverse()


def hom_equivariant(E1: EquivariantModule, E2: EquivariantModule) -> list[Matrix]:
    """Basis of the maps fixed by ``g.f = beta_g^-1 f alpha_g``, computed as
    the image of the averaging projector on ``Hom_A(X, Y)``."""
    act = E1.action
    inv = _order_inverse(act)
    G = act.group
    averaged = []
    for f in hom_space(E1.module, E2.module):
        total = Matrix.zeros(E1.field, E2.dim, E1.dim)
        for g in G.elements:
            total = total + E2.alpha_inv(g) @ f @ E1.alpha[g]
        averaged.append(total * inv)
    return _independent(averaged, E2.dim, E1.dim)


def _independent(mats: Sequence[Matrix], rows: int, cols: int) -> list[Matrix]:
    if not mats:
        return []
    F = mats[0].field
    flat = [Matrix(F, [[v] for v in m.flat()], rows * cols, 1) for m in mats]
    basis = span_basis(F, flat, rows * cols)
    return [Matrix(F, [b.flat()[r * cols:(r + 1) * cols] for r in range(rows)], rows, cols) for b in basis]


def hom_equivariant_by_equations(E1: EquivariantModule, E2: EquivariantModule) -> list[Matrix]:
    """Same space solved directly from ``beta_g f = f alpha_g``; valid in any characteristic."""
    from .algebra import intertwiner_space
    act = E1.action
    X, Y = E1.module, E2.module
    pairs = [(X.act(b), Y.act(b)) for b in act.algebra.basis]
    pairs += [(E1.alpha[g], E2.alpha[g]) for g in act.group.elements]
    return intertwiner_space(X.field, pairs, Y.dim, X.dim)


# ---------------------------------------------------------------------------
# crossed-product modules


def to_crossed_module(E: EquivariantModule, cp: CrossedProduct | None = None) -> ModuleRep:
    """``m . (r g) = alpha_{g^-1}^-1 (m . r)`` on the carrier of ``X``."""
    act = E.action
    cp = cp or CrossedProduct(act.weak)
    G, A = act.group, act.algebra
    X = E.module
    action = []
    for g in G.elements:
        ainv = E.alpha_inv(G.inv(g))
        for i in range(A.dim):
            action.append(ainv @ X.action[i])
    return ModuleRep(cp.algebra, X.dim, action)


def from_crossed_module(act: ModuleCategoryAction, Y: ModuleRep, cp: CrossedProduct | None = None) -> EquivariantModule:
    """Inverse of :func:`to_crossed_module`: ``x . r = x . (r c(e,e)^-1 e)``
    and ``beta_g(x . g^-1) = x``."""
    cp = cp or CrossedProduct(act.weak)
    A, G = act.algebra, act.group
    action = [Y.act(cp.embed_base(b)) for b in A.basis]
    X = ModuleRep(A, Y.dim, action)
    alpha = {g: Y.act(cp.element(A.unit, G.inv(g))).inverse() for g in G.elements}
    E = EquivariantModule(act, X, alpha)
    if not X.validate().ok or not E.validate().ok:
        raise ArithmeticError("transported structure fails the module axioms")
    return E


# ---------------------------------------------------------------------------
# induction


def induction(act: ModuleCategoryAction, X: ModuleRep) -> EquivariantModule:
    """``Ind(X) = (sum_h F_h(X), eps(X))`` where ``eps(X)_g`` sends the
    summand ``F_h X`` to ``F_g F_{g^-1 h} X`` by ``(eps_{g,g^-1 h})_X^-1``."""
    G = act.group
    els = G.elements
    idx = {h: i for i, h in enumerate(els)}
    carrier = direct_sum([act.F(h)(X) for h in els])
    n = X.dim
    F = X.field
    alpha = {}
    for g in els:
        ginv = G.inv(g)
        grid = [[Matrix.zeros(F, n, n) for _ in els] for _ in els]
        for h in els:
            k = G.mul(ginv, h)
            grid[idx[k]][idx[h]] = act.eps(g, k).at(X).inverse()
        alpha[g] = Matrix.from_blocks(F, grid)
    return EquivariantModule(act, carrier, alpha)


def induce_morphism(act: ModuleCategoryAction, f: Matrix) -> Matrix:
    """``Ind(f) = sum_h F_h(f)``."""
    return Matrix.block_diag(f.field, [f] * act.group.order)


def unit_eta(act: ModuleCategoryAction, X: ModuleRep) -> Matrix:
    """``eta_X = (u_X^-1, 0, ..., 0)^t : X -> U Ind X``."""
    F, n = X.field, X.dim
    blocks = [[act.unit().at(X).inverse() if g == act.group.identity else Matrix.zeros(F, n, n)]
              for g in act.group.elements]
    return Matrix.from_blocks(F, blocks)


def counit_eps(E: EquivariantModule) -> Matrix:
    """``sum_h beta_h^-1 : Ind U E -> E``."""
    return Matrix.from_blocks(E.field, [[E.alpha_inv(h) for h in E.action.group.elements]])


def unit_eta_prime(E: EquivariantModule) -> Matrix:
    """``(beta_h)_h : E -> Ind U E``."""
    return Matrix.from_blocks(E.field, [[E.alpha[h]] for h in E.action.group.elements])


def counit_eps_prime(act: ModuleCategoryAction, X: ModuleRep) -> Matrix:
    """``(u_X, 0, ..., 0) : U Ind X -> X``."""
    F, n = X.field, X.dim
    return Matrix.from_blocks(F, [[act.unit().at(X) if g == act.group.identity else Matrix.zeros(F, n, n)
                                   for g in act.group.elements]])


def _split_row(theta: Matrix, n: int, count: int) -> list[Matrix]:
    return [theta.block(0, theta.nrows, i * n, (i + 1) * n) for i in range(count)]


def _split_col(theta: Matrix, n: int, count: int) -> list[Matrix]:
    return [theta.block(i * n, (i + 1) * n, 0, theta.ncols) for i in range(count)]


def adj1_forward(act: ModuleCategoryAction, X: ModuleRep, theta: Matrix) -> Matrix:
    """``sum_h theta_h -> theta_e u_X^-1``."""
    blocks = _split_row(theta, X.dim, act.group.order)
    return blocks[act.group.index(act.group.identity)] @ act.unit().at(X).inverse()


def adj1_backward(act: ModuleCategoryAction, X: ModuleRep, E: EquivariantModule, f: Matrix) -> Matrix:
    """``f -> sum_g theta_g`` with ``theta_e = f u_X`` and
    ``theta_g = beta_g^-1 theta_e (eps_{g,e})_X^-1``."""
    e = act.group.identity
    theta_e = f @ act.unit().at(X)
    blocks = [E.alpha_inv(g) @ theta_e @ act.eps(g, e).at(X).inverse() for g in act.group.elements]
    return Matrix.from_blocks(X.field, [blocks])


def adj2_forward(act: ModuleCategoryAction, E: EquivariantModule, f: Matrix) -> Matrix:
    """``f: Y -> X`` goes to ``(F_h(f) beta_h)_h``."""
    return Matrix.from_blocks(f.field, [[f @ E.alpha[h]] for h in act.group.elements])


def adj2_backward(act: ModuleCategoryAction, X: ModuleRep, theta: Matrix) -> Matrix:
    """``theta -> eps'_X theta``."""
    return counit_eps_prime(act, X) @ theta


def _bijective(images: Sequence[Matrix], target_basis: Sequence[Matrix]) -> bool:
    if len(images) != len(target_basis):
        return False
    if not images:
        return True
    r, c = images[0].nrows, images[0].ncols
    return len(_independent(list(images), r, c)) == len(images)


def verify_adjunctions(act: ModuleCategoryAction, modules: Sequence[ModuleRep],
                       equivariants: Sequence[EquivariantModule]) -> Report:
    """Both hom bijections, triangle identities and the split counit on all pairs."""
    rep = Report("adjunctions")
    G = act.group
    inv = _order_inverse(act)
    adj1_ok = adj2_ok = tri_ok = split_ok = True
    pairs = 0
    for X in modules:
        IX = induction(act, X)
        for E in equivariants:
            pairs += 1
            Y = E.module
            left = hom_equivariant(IX, E)
            right = hom_space(X, Y)
            fwd = [adj1_forward(act, X, t) for t in left]
            adj1_ok &= all(is_module_morphism(f, X, Y) for f in fwd) and _bijective(fwd, right)
            adj1_ok &= all(adj1_backward(act, X, E, adj1_forward(act, X, t)) == t for t in left)
            adj1_ok &= all(adj1_forward(act, X, adj1_backward(act, X, E, f)) == f for f in right)
            adj1_ok &= all(is_equivariant_morphism(adj1_backward(act, X, E, f), IX, E) for f in right)
            left2 = hom_space(Y, X)
            right2 = hom_equivariant(E, IX)
            fwd2 = [adj2_forward(act, E, f) for f in left2]
            adj2_ok &= all(is_equivariant_morphism(t, E, IX) for t in fwd2) and _bijective(fwd2, right2)
            adj2_ok &= all(adj2_backward(act, X, adj2_forward(act, E, f)) == f for f in left2)
            adj2_ok &= all(adj2_forward(act, E, adj2_backward(act, X, t)) == t for t in right2)
    for X in modules:
        IX = induction(act, X)
        ident = Matrix.identity(X.field, IX.dim)
        # eps Ind o Ind eta = 1 and Ind eps' o eta' Ind = 1
        tri_ok &= counit_eps(IX) @ induce_morphism(act, unit_eta(act, X)) == ident
        tri_ok &= induce_morphism(act, counit_eps_prime(act, X)) @ unit_eta_prime(IX) == ident
    for E in equivariants:
        ident = Matrix.identity(E.field, E.dim)
        # U eps o eta U = 1 and eps' U o U eta' = 1
        tri_ok &= counit_eps(E) @ unit_eta(act, E.module) == ident
        tri_ok &= counit_eps_prime(act, E.module) @ unit_eta_prime(E) == ident
        IY = induction(act, E.module)
        section = unit_eta_prime(E) * inv
        retraction = counit_eps(E) * inv
        split_ok &= counit_eps(E) @ section == ident and retraction @ unit_eta_prime(E) == ident
        split_ok &= is_equivariant_morphism(section, E, IY) and is_equivariant_morphism(retraction, IY, E)
        split_ok &= is_equivariant_morphism(counit_eps(E), IY, E) and is_equivariant_morphism(unit_eta_prime(E), E, IY)
    rep.add("adj1_bijection", adj1_ok)
    rep.add("adj2_bijection", adj2_ok)
    rep.add("triangle_identities", tri_ok)
    rep.add("split_counit", split_ok)
    rep.data.update({"pairs": pairs, "modules": len(modules), "equivariant_objects": len(equivariants),
                     "group_order": G.order})
    return rep


# ---------------------------------------------------------------------------
# monads


def monad_M(act: ModuleCategoryAction, X: ModuleRep) -> ModuleRep:
    return direct_sum([act.F(h)(X) for h in act.group.elements])


def monad_M_mu(act: ModuleCategoryAction, X: ModuleRep) -> Matrix:
    """Entry ``F_h F_g X -> F_{h'} X`` is ``delta_{hg,h'} (eps_{h,g})_X``."""
    G = act.group
    els = G.elements
    F, n = X.field, X.dim
    grid = [[Matrix.zeros(F, n, n) for _ in range(len(els) ** 2)] for _ in els]
    for a, h in enumerate(els):
        for b, g in enumerate(els):
            grid[G.index(G.mul(h, g))][a * len(els) + b] = act.eps(h, g).at(X)
    return Matrix.from_blocks(F, grid)


def monad_N_mu(act: ModuleCategoryAction, E: EquivariantModule) -> Matrix:
    """Entry ``F_g F_h Y -> F_{h'} Y`` is ``delta_{g,h'} delta_{h,e} F_g(u_Y)``."""
    G = act.group
    els = G.elements
    Y = E.module
    F, n = Y.field, Y.dim
    u = act.unit().at(Y)
    grid = [[Matrix.zeros(F, n, n) for _ in range(len(els) ** 2)] for _ in els]
    for a, g in enumerate(els):
        grid[a][a * len(els) + G.index(G.identity)] = u
    return Matrix.from_blocks(F, grid)


def verify_monad_laws(act: ModuleCategoryAction, modules: Sequence[ModuleRep],
                      equivariants: Sequence[EquivariantModule]) -> Report:
    rep = Report("monads")
    m_assoc = m_unit = m_adj = True
    for X in modules:
        MX = monad_M(act, X)
        mu = monad_M_mu(act, X)
        mu_MX = monad_M_mu(act, MX)
        M_mu = induce_morphism(act, mu)
        eta = unit_eta(act, X)
        ident = Matrix.identity(X.field, MX.dim)
        m_assoc &= mu @ M_mu == mu @ mu_MX
        m_unit &= mu @ induce_morphism(act, eta) == ident and mu @ unit_eta(act, MX) == ident
        # mu = U eps Ind
        m_adj &= mu == counit_eps(induction(act, X))
        m_adj &= is_module_morphism(mu, monad_M(act, MX), MX) and is_module_morphism(eta, X, MX)
    n_assoc = n_unit = n_adj = True
    for E in equivariants:
        Y = E.module
        IY = induction(act, Y)
        mu = monad_N_mu(act, E)
        mu_N = monad_N_mu(act, IY)
        N_mu = induce_morphism(act, mu)
        ident = Matrix.identity(Y.field, IY.dim)
        n_assoc &= mu @ N_mu == mu @ mu_N
        n_unit &= mu @ induce_morphism(act, unit_eta_prime(E)) == ident and mu @ unit_eta_prime(IY) == ident
        # mu' = Ind eps' U
        n_adj &= mu == induce_morphism(act, counit_eps_prime(act, Y))
        n_adj &= is_equivariant_morphism(mu, induction(act, IY.module), IY)
    rep.add("M_associativity", m_assoc)
    rep.add("M_unit_laws", m_unit)
    rep.add("M_defined_by_adjunction", m_adj)
    rep.add("N_associativity", n_assoc)
    rep.add("N_unit_laws", n_unit)
    rep.add("N_defined_by_adjunction", n_adj)
    rep.data.update({"modules": len(modules), "equivariant_objects": len(equivariants)})
    return rep


def comparison_module(E: EquivariantModule) -> Matrix:
    """``K(X, alpha) = (X, sum_h alpha_h^-1)``."""
    return counit_eps(E)


def is_M_module(act: ModuleCategoryAction, X: ModuleRep, lam: Matrix) -> bool:
    MX = monad_M(act, X)
    return (lam @ induce_morphism(act, lam) == lam @ monad_M_mu(act, X)
            and lam @ unit_eta(act, X) == Matrix.identity(X.field, X.dim)
            and is_module_morphism(lam, MX, X))


# ---------------------------------------------------------------------------
# probes


def equivariant_probes(act: ModuleCategoryAction, modules: Sequence[ModuleRep] | None = None, *,
                       seed: int = 0) -> list[EquivariantModule]:
    """Simple equivariant objects (simple crossed-product modules) and the
    inductions of the given modules."""
    from .decompose import BlockData, SearchUndetermined
    modules = list(modules) if modules is not None else act.default_probes(seed=seed)
    cp = CrossedProduct(act.weak)
    out: list[EquivariantModule] = []
    try:
        for S in BlockData(cp.algebra, seed=seed).simples:
            out.append(from_crossed_module(act, S, cp))
    except SearchUndetermined:
        pass
    for X in modules:
        E = induction(act, X)
        if E not in out:
            out.append(E)
    return out


def end_ind_dimension_law(act: ModuleCategoryAction, M: ModuleRep) -> tuple[int, int]:
    """``dim End(Ind M)`` versus ``sum_g dim Hom(M, F_g M)``."""
    IM = induction(act, M)
    lhs = len(hom_equivariant(IM, IM))
    rhs = sum(len(hom_space(M, act.F(g)(M))) for g in act.group.elements)
    return lhs, rhs

"""The dual action of the character group on equivariant modules, the functor
``Theta``, the monad isomorphism, equivariant functors and stable objects.

Equivariant modules are identified with modules over ``A * G``. Under that
identification the dual twist ``F_chi`` is the twist by the automorphism
``r g -> chi(g)^-1 r g`` of ``A * G``. The dual action is therefore itself a
strict weak action, and objects of the double equivariantization are
equivariant modules for it, stored with every layer explicit.
"""
from __future__ import annotations

from typing import Mapping, Sequence

from .abgroup import Character, FinAbGroup, GroupElement, character_group
from .action import (CrossedProduct, Functor, ModuleCategoryAction, Nat, WeakAction, crossed_system_from_stable_module,
                     is_natural_iso_on, nats_agree, stable_isomorphisms)
from .algebra import AlgebraMap, ModuleRep, direct_sum, find_isomorphism, hom_space
from .decompose import BlockData, decompose_module, group_by_isomorphism
from .equivariant import (EquivariantModule, _independent, _order_inverse, adj1_backward, from_crossed_module,
                          hom_equivariant, induce_morphism, induction, is_equivariant_morphism, monad_M_mu, monad_N_mu,
                          to_crossed_module)
from .report import Report, SearchUndetermined
from .scalar import Matrix, lincomb


class DualAction:
    """The strict action of the characters on equivariant modules."""

    def __init__(self, act: ModuleCategoryAction):
        self.act = act
        G = act.group
        self.group = G
        self.characters = character_group(G, act.field)
        # characters are indexed by exponent tuples in the same order as G
        self.dual_group = FinAbGroup(G.cyclic_orders)
        self.cp = CrossedProduct(act.weak)
        B = self.cp.algebra
        n = act.algebra.dim
        rho = {}
        for psi in self.dual_group.elements:
            chi = self.char(psi)
            # rho(psi)(r g) = psi(g) r g
            diag = [chi(g) for g in G.elements for _ in range(n)]
            rows = [[diag[i] if i == j else 0 for j in range(B.dim)] for i in range(B.dim)]
            rho[psi] = AlgebraMap(B, B, Matrix.from_entries(act.field, rows))
        self.weak = WeakAction.strict(self.dual_group, B, rho)
        self.action = self.weak.module_action()

    def char(self, psi: GroupElement) -> Character:
        return self.characters[self.dual_group.index(psi)]

    def twist(self, psi: GroupElement, E: EquivariantModule) -> EquivariantModule:
        """``F_chi(X, alpha) = (X, chi (x) alpha)``."""
        return E.twisted_by_character(self.char(psi))

    def lift(self, E: EquivariantModule) -> ModuleRep:
        return to_crossed_module(E, self.cp)

    def lower(self, Y: ModuleRep) -> EquivariantModule:
        return from_crossed_module(self.act, Y, self.cp)

    def nested(self, E: EquivariantModule, beta: Mapping[GroupElement, Matrix]) -> EquivariantModule:
        """The pair ``((X, alpha), beta)`` as an equivariant module for the dual action."""
        return EquivariantModule(self.action, self.lift(E), beta)

    def check_strictness(self, probes: Sequence[EquivariantModule]) -> bool:
        """``F_chi F_psi = F_{chi psi}`` on the probes, and agreement with the twist of ``A * G``."""
        H = self.dual_group
        for E in probes:
            for a in H.elements:
                if self.lift(self.twist(a, E)) != self.action.F(a)(self.lift(E)):
                    return False
                for b in H.elements:
                    if self.twist(a, self.twist(b, E)) != self.twist(H.mul(a, b), E):
                        return False
        return True


# ---------------------------------------------------------------------------
# Theta and the double dual


def can(dual: DualAction, X: ModuleRep) -> dict:
    """``can(X)_chi = sum_h chi(h)`` on ``Ind(X)``."""
    G = dual.group
    F = X.field
    out = {}
    for psi in dual.dual_group.elements:
        chi = dual.char(psi)
        out[psi] = Matrix.block_diag(F, [Matrix.identity(F, X.dim) * chi(h) for h in G.elements])
    return out


def theta(dual: DualAction, X: ModuleRep) -> EquivariantModule:
    """``Theta(X) = (Ind(X), can(X))``."""
    return dual.nested(induction(dual.act, X), can(dual, X))


def double_dual_twist(dual: DualAction, g: GroupElement, N: EquivariantModule) -> EquivariantModule:
    """``(ev(g) (x) beta)_chi = chi(g^-1) beta_chi``."""
    ginv = dual.group.inv(g)
    return EquivariantModule(dual.action, N.module,
                             {psi: N.alpha[psi] * dual.char(psi)(ginv) for psi in dual.dual_group.elements})


def partial(dual: DualAction, g: GroupElement, X: ModuleRep) -> Matrix:
    """``(partial_g)_X : Ind F_g X -> Ind X``, the summand ``F_h F_g X``
    going to ``F_{hg} X`` by ``(eps_{h,g})_X``."""
    act = dual.act
    G = act.group
    F, n = X.field, X.dim
    grid = [[Matrix.zeros(F, n, n) for _ in G.elements] for _ in G.elements]
    for h in G.elements:
        grid[G.index(G.mul(h, g))][G.index(h)] = act.eps(h, g).at(X)
    return Matrix.from_blocks(F, grid)


def verify_theta_equivalence(dual: DualAction, probes: Sequence[ModuleRep], *, seed: int = 0) -> Report:
    """Full faithfulness and density of ``Theta`` relative to ``probes``, and
    the equivariance of ``(Theta, partial)``."""
    act = dual.act
    G = act.group
    rep = Report("theta-equivalence")
    thetas = [theta(dual, X) for X in probes]
    rep.add("theta_objects_valid", all(T.validate().ok for T in thetas))
    faithful = True
    dims = []
    for X, TX in zip(probes, thetas):
        for Y, TY in zip(probes, thetas):
            src = hom_space(X, Y)
            tgt = hom_equivariant(TX, TY)
            images = [induce_morphism(act, f) for f in src]
            ok = (len(src) == len(tgt) and all(is_equivariant_morphism(m, TX, TY) for m in images)
                  and len(_independent(images, TY.dim, TX.dim)) == len(images)) if images else not tgt
            faithful &= ok
            dims.append([len(src), len(tgt)])
    rep.add("fully_faithful_on_probes", faithful, {"hom_dims": dims})

    # density: simples and indecomposable projectives of the double crossed
    # product must occur among the indecomposable summands of Theta(probes)
    try:
        big = CrossedProduct(dual.weak)
        blocks = BlockData(big.algebra, seed=seed)
        targets = list(blocks.simples) + list(blocks.indecomposable_projectives)
        summands = []
        for T in thetas:
            summands += [S for S, _, _ in decompose_module(to_crossed_module(T, big), seed=seed)]
        missing = [i for i, Q in enumerate(targets)
                   if not any(Q.dim == S.dim and find_isomorphism(Q, S, seed=seed) is not None for S in summands)]
        rep.add("dense_relative_to_probes", not missing,
                {"indecomposable_targets": len(targets), "theta_summands": len(summands), "missing": missing})
    except SearchUndetermined as exc:
        rep.add("dense_relative_to_probes", False, {"inconclusive": str(exc)})

    iso_ok = identity_ok = True
    for X in probes:
        for g in G.elements:
            d = partial(dual, g, X)
            src = theta(dual, act.F(g)(X))
            tgt = double_dual_twist(dual, g, theta(dual, X))
            iso_ok &= d.is_invertible() and is_equivariant_morphism(d, src, tgt)
            for h in G.elements:
                gh = G.mul(g, h)
                lhs = partial(dual, gh, X) @ induce_morphism(act, act.eps(g, h).at(X))
                rhs = partial(dual, h, X) @ partial(dual, g, act.F(h)(X))
                identity_ok &= lhs == rhs
    rep.add("partial_isomorphisms", iso_ok)
    rep.add("partial_equivariance_identity", identity_ok)
    rep.data["probes"] = len(probes)
    return rep


# ---------------------------------------------------------------------------
# monad isomorphism


def dual_monad_object(dual: DualAction, E: EquivariantModule) -> EquivariantModule:
    """``sum_chi F_chi(E)``."""
    parts = [dual.twist(psi, E) for psi in dual.dual_group.elements]
    X = direct_sum([P.module for P in parts])
    alpha = {g: Matrix.block_diag(E.field, [P.alpha[g] for P in parts]) for g in dual.group.elements}
    return EquivariantModule(dual.act, X, alpha)


def monad_isomorphism(dual: DualAction, E: EquivariantModule) -> tuple[Matrix, Matrix]:
    """``f`` with ``chi``-block ``(chi(h^-1) alpha_h)_h`` and its inverse with
    ``chi``-row ``(1/|G|) sum_h chi(h) alpha_h^-1``."""
    G = dual.group
    F = E.field
    inv = _order_inverse(dual.act)
    chars = [dual.char(psi) for psi in dual.dual_group.elements]
    f = Matrix.from_blocks(F, [[E.alpha[h] * chi(G.inv(h)) for chi in chars] for h in G.elements])
    finv = Matrix.from_blocks(F, [[E.alpha_inv(h) * (chi(h) * inv) for h in G.elements] for chi in chars])
    return f, finv


def verify_monad_isomorphism(dual: DualAction, probes: Sequence[EquivariantModule]) -> Report:
    act = dual.act
    rep = Report("monad-isomorphism")
    inverse_ok = morphism_ok = unit_ok = mult_ok = natural_ok = True
    H = dual.dual_group
    for E in probes:
        f, finv = monad_isomorphism(dual, E)
        n = f.nrows
        inverse_ok &= f @ finv == Matrix.identity(E.field, n) and finv @ f == Matrix.identity(E.field, n)
        ME = dual_monad_object(dual, E)
        NE = induction(act, E.module)
        morphism_ok &= is_equivariant_morphism(f, ME, NE)
        # units: eta-hat = (1, 0, ..., 0)^t, eta' = (beta_h)_h
        eta_hat = Matrix.from_blocks(E.field, [[Matrix.identity(E.field, E.dim) if psi == H.identity
                                               else Matrix.zeros(E.field, E.dim, E.dim)] for psi in H.elements])
        eta_prime = Matrix.from_blocks(E.field, [[E.alpha[h]] for h in act.group.elements])
        unit_ok &= f @ eta_hat == eta_prime
        # multiplications: f mu-hat = mu' (f_N o M-hat f)
        mu_hat = monad_M_mu(dual.action, dual.lift(E))
        f_N, _ = monad_isomorphism(dual, NE)
        lhs = f @ mu_hat
        rhs = monad_N_mu(act, E) @ f_N @ Matrix.block_diag(E.field, [f] * H.order)
        mult_ok &= lhs == rhs
        for E2 in probes:
            f2, _ = monad_isomorphism(dual, E2)
            for phi in hom_equivariant(E, E2):
                natural_ok &= f2 @ Matrix.block_diag(E.field, [phi] * H.order) == induce_morphism(act, phi) @ f
    rep.add("mutually_inverse", inverse_ok)
    rep.add("equivariant_morphism", morphism_ok)
    rep.add("compatible_with_units", unit_ok)
    rep.add("compatible_with_multiplications", mult_ok)
    rep.add("natural_on_probes", natural_ok)
    rep.data["probes"] = len(probes)
    return rep


# ---------------------------------------------------------------------------
# equivariant endofunctors given by twists


class EquivariantFunctorData:
    """``Phi = twist by tau`` with ``delta_g: Phi F_g -> F_g Phi`` given by
    units ``d_g`` (component at ``X`` is ``X.act(d_g)``)."""

    def __init__(self, act: ModuleCategoryAction, tau: AlgebraMap, delta: Mapping[GroupElement, Matrix]):
        self.act = act
        self.tau = tau
        self.delta = dict(delta)
        self.functor = Functor((tau,), "Phi")

    def delta_nat(self, g) -> Nat:
        F = self.act.F(g)
        return Nat.from_element(self.delta[g], self.functor * F, F * self.functor, f"delta[{g}]")

    def sides(self, g, h) -> tuple[Nat, Nat]:
        """Both sides of the equivariance identity for ``(g, h)``."""
        act = self.act
        Phi = self.functor
        lhs = self.delta_nat(act.group.mul(g, h)) @ act.eps(g, h).whisker_left(Phi)
        rhs = (act.eps(g, h).whisker_right(Phi)
               @ self.delta_nat(h).whisker_left(act.F(g))
               @ self.delta_nat(g).whisker_right(act.F(h)))
        return lhs, rhs

    def validate(self, probes: Sequence[ModuleRep]) -> Report:
        G = self.act.group
        rep = Report("equivariant-functor")
        rep.add("tau_automorphism", self.tau.is_automorphism())
        rep.add("delta_natural_isos", all(is_natural_iso_on(self.delta_nat(g), probes) for g in G.elements))
        if not rep.ok:
            return rep
        bad = [[G.key(g), G.key(h)] for g in G.elements for h in G.elements
               if not nats_agree(*self.sides(g, h), probes)]
        rep.add("equivariance_identity", not bad, {"failing": bad} if bad else None)
        return rep

    def apply(self, E: EquivariantModule) -> EquivariantModule:
        """``(Phi(X), (delta_g)_X Phi(alpha_g))``."""
        X = E.module
        alpha = {g: X.act(self.delta[g]) @ E.alpha[g] for g in self.act.group.elements}
        return EquivariantModule(self.act, self.functor(X), alpha)

    def xi(self, X: ModuleRep) -> Matrix:
        """``xi_X = sum_h (delta_h)_X : (Phi, delta)^G Ind X -> Ind Phi X``."""
        return Matrix.block_diag(X.field, [X.act(self.delta[h]) for h in self.act.group.elements])


def identity_functor_data(act: ModuleCategoryAction, scalars: Mapping[GroupElement, object]) -> EquivariantFunctorData:
    """``(Id, (s_g)_g)`` with scalar components."""
    A = act.algebra
    return EquivariantFunctorData(act, AlgebraMap.identity(A), {g: A.scalar(s) for g, s in scalars.items()})


def central_twist_data(act: ModuleCategoryAction, a: GroupElement) -> EquivariantFunctorData:
    """``(F_a, c_a)`` with ``(c_a)_g = eps_{g,a}^-1 eps_{a,g}``."""
    G, A, c = act.group, act.algebra, act.weak.c
    ainv = G.inv(a)
    delta = {}
    for g in G.elements:
        ginv = G.inv(g)
        delta[g] = A.mul(c[(ginv, ainv)], A.inverse(c[(ainv, ginv)]))
    return EquivariantFunctorData(act, act.weak.rho[ainv], delta)


def verify_equivariantized_functor(dual: DualAction, fd: EquivariantFunctorData, modules: Sequence[ModuleRep],
                                   equivariants: Sequence[EquivariantModule]) -> Report:
    """``(Phi, delta)^G`` on probes: valid outputs, commutes with dual twists,
    and ``xi`` is a natural isomorphism compatible with ``can``."""
    act = fd.act
    rep = Report("equivariantized-functor")
    rep.extend(fd.validate(modules), "datum")
    outputs = [fd.apply(E) for E in equivariants]
    rep.add("outputs_valid", all(O.validate().ok for O in outputs))
    rep.add("commutes_with_dual_twists",
            all(fd.apply(dual.twist(psi, E)) == dual.twist(psi, fd.apply(E))
                for E in equivariants for psi in dual.dual_group.elements))
    xi_ok = natural = can_ok = True
    for X in modules:
        src = fd.apply(induction(act, X))
        tgt = induction(act, fd.functor(X))
        xi = fd.xi(X)
        xi_ok &= xi.is_invertible() and is_equivariant_morphism(xi, src, tgt)
        cX, cFX = can(dual, X), can(dual, fd.functor(X))
        can_ok &= all(cFX[psi] @ xi == xi @ cX[psi] for psi in dual.dual_group.elements)
        for Y in modules:
            for f in hom_space(X, Y):
                natural &= fd.xi(Y) @ induce_morphism(act, f) == induce_morphism(act, f) @ xi
    rep.add("xi_isomorphisms", xi_ok)
    rep.add("xi_natural", natural)
    rep.add("xi_compatible_with_can", can_ok)
    return rep


def verify_character_functor_identity(dual: DualAction, equivariants: Sequence[EquivariantModule]) -> bool:
    """``(Id, (chi(g)^-1))^G = F_chi`` on the probes, for every character."""
    act = dual.act
    for psi in dual.dual_group.elements:
        chi = dual.char(psi)
        fd = identity_functor_data(act, {g: chi(g).inverse() for g in act.group.elements})
        if any(fd.apply(E) != dual.twist(psi, E) for E in equivariants):
            return False
    return True


def verify_central_twist(act: ModuleCategoryAction, a: GroupElement, modules: Sequence[ModuleRep],
                         equivariants: Sequence[EquivariantModule]) -> Report:
    """``(F_a, c_a)`` is equivariant and ``psi_(X, alpha) = alpha_a`` is a
    natural isomorphism ``Id -> (F_a, c_a)^G``."""
    fd = central_twist_data(act, a)
    rep = Report("central-twist")
    rep.extend(fd.validate(modules), "datum")
    iso = natural = True
    for E in equivariants:
        iso &= is_equivariant_morphism(E.alpha[a], E, fd.apply(E)) and E.alpha[a].is_invertible()
        for E2 in equivariants:
            for f in hom_equivariant(E, E2):
                natural &= E2.alpha[a] @ f == f @ E.alpha[a]
    rep.add("psi_isomorphisms", iso)
    rep.add("psi_natural", natural)
    return rep


# ---------------------------------------------------------------------------
# stable objects


def _summands(E: EquivariantModule, cp: CrossedProduct, seed: int = 0) -> list[ModuleRep]:
    return [S for S, _, _ in decompose_module(to_crossed_module(E, cp), seed=seed)]


def _distinct(mods: Sequence[ModuleRep], seed: int = 0) -> list[ModuleRep]:
    labels = group_by_isomorphism(mods, seed=seed)
    seen, out = set(), []
    for lab, M in zip(labels, mods):
        if lab not in seen:
            seen.add(lab)
            out.append(M)
    return out


def is_basic(M: ModuleRep, *, seed: int = 0) -> bool:
    parts = [S for S, _, _ in decompose_module(M, seed=seed)]
    return len(_distinct(parts, seed)) == len(parts)


def stable_bijection_iota(dual: DualAction, M: ModuleRep, *, seed: int = 0) -> tuple[EquivariantModule, Report]:
    """The basic representative of ``add Ind(M)`` for a basic stable ``M``."""
    act = dual.act
    rep = Report("iota")
    if stable_isomorphisms(act, M, seed=seed) is None:
        raise ValueError("module is not G-stable")
    if not is_basic(M, seed=seed):
        raise ValueError("module is not basic")
    IM = induction(act, M)
    parts = _summands(IM, dual.cp, seed)
    reps = _distinct(parts, seed)
    iota = dual.lower(direct_sum(reps))
    rep.add("iota_equivariant", iota.validate().ok)
    rep.add("iota_basic", is_basic(dual.lift(iota), seed=seed))
    back = _distinct(_summands(iota, dual.cp, seed) + reps, seed)
    rep.add("add_iota_equals_add_ind", len(back) == len(reps))
    stable = all(find_isomorphism(dual.lift(iota), dual.lift(dual.twist(psi, iota)), seed=seed) is not None
                 for psi in dual.dual_group.elements)
    rep.add("iota_dual_stable", stable)
    rep.data.update({"ind_summands": len(parts), "distinct": len(reps), "dim": iota.dim})
    return iota, rep


def _orbits(objects: Sequence[ModuleRep], twists, seed: int = 0) -> tuple[int, bool]:
    """Number of orbits of isoclasses and whether the list is twist-closed."""
    labels = group_by_isomorphism(list(objects), seed=seed)
    classes = sorted(set(labels))
    rep_of = {lab: objects[labels.index(lab)] for lab in classes}
    parent = {lab: lab for lab in classes}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    closed = True
    for lab in classes:
        M = rep_of[lab]
        for tw in twists:
            T = tw(M)
            hit = next((l2 for l2 in classes if rep_of[l2].dim == T.dim
                        and find_isomorphism(T, rep_of[l2], seed=seed) is not None), None)
            if hit is None:
                closed = False
                continue
            parent[find(hit)] = find(lab)
    return len({find(lab) for lab in classes}), closed


def orbit_census(dual: DualAction, indecomposables: Sequence[ModuleRep], *, seed: int = 0) -> Report:
    """Orbit counts of ``ind C / G`` and ``ind C^G / G-hat`` over the probes.

    The equivariant side uses the indecomposable summands of ``Ind`` of the
    probes, which is where every indecomposable equivariant object lives."""
    act = dual.act
    rep = Report("orbit-census")
    left, left_closed = _orbits(indecomposables, [act.F(g) for g in act.group.elements], seed)
    eq_parts = []
    for M in indecomposables:
        eq_parts += _summands(induction(act, M), dual.cp, seed)
    dual_twists = [dual.action.F(psi) for psi in dual.dual_group.elements]
    right, right_closed = _orbits(eq_parts, dual_twists, seed)
    rep.add("probe_list_twist_closed", left_closed and right_closed)
    rep.add("orbit_counts_match", left == right, {"C_over_G": left, "CG_over_dual": right})
    rep.data.update({"C_over_G": left, "CG_over_dual": right, "equivariant_indecomposables": len(eq_parts)})
    return rep


def end_ind_check(act: ModuleCategoryAction, M: ModuleRep, alpha: Mapping[GroupElement, Matrix] | None = None,
                  *, seed: int = 0) -> Report:
    """``End(Ind M) = End(M) * G`` via ``a g^-1 -> adj1^-1(inc_g F_g(a) alpha_g)``."""
    G = act.group
    rep = Report("end-ind")
    alpha = alpha or stable_isomorphisms(act, M, seed=seed)
    if alpha is None:
        raise ValueError("module is not G-stable")
    weak, basis = crossed_system_from_stable_module(act, M, alpha)
    rep.add("crossed_system_valid", weak.validate().ok)
    cp = CrossedProduct(weak)
    IM = induction(act, M)
    end_basis = hom_equivariant(IM, IM)
    rep.add("dimensions_agree", len(end_basis) == cp.dim, {"end_ind": len(end_basis), "crossed": cp.dim})
    F = M.field
    n = M.dim
    images = []
    for h in G.elements:
        g = G.inv(h)
        for a in basis:
            inc = Matrix.from_blocks(F, [[Matrix.identity(F, n) if k == g else Matrix.zeros(F, n, n)]
                                         for k in G.elements])
            images.append(adj1_backward(act, M, IM, inc @ a @ alpha[g]))
    rep.add("images_are_endomorphisms", all(is_equivariant_morphism(x, IM, IM) for x in images))
    rep.add("bijective", len(_independent(images, IM.dim, IM.dim)) == cp.dim == len(images))
    B = cp.algebra
    mult = all(images[i] @ images[j] == lincomb(F, B.products[i][j].flat(), images) for i in range(B.dim) for j in range(B.dim))
    rep.add("multiplicative", mult)
    rep.add("unital", lincomb(F, B.unit.flat(), images) == Matrix.identity(F, IM.dim))
    return rep

"""The obstruction 2-cocycle of a twist functor that commutes with the action
up to chosen isomorphisms, its class, and the kernel of the forgetful map.

For a datum ``(Phi, delta)`` the scalar ``sigma(g, h)`` is read off from

    delta_{gh} o Phi eps_{g,h} = sigma(g, h) eps_{g,h} Phi o F_g delta_h o delta_g F_h

on every probe. The identity only pins down a scalar when the centre of the
module category is the base field; when the ratio is not one scalar on all
probes the computation is refused.
"""
from __future__ import annotations

import itertools
import random
from typing import Mapping, Sequence

from .abgroup import Cocycle2, GroupElement, character_group, is_2cocycle, is_coboundary
from .action import ModuleCategoryAction
from .algebra import AlgebraMap, ModuleRep, find_unit_in_span
from .duality import EquivariantFunctorData
from .report import Report
from .scalar import Matrix, Scalar


class CommutingFunctorDatum(EquivariantFunctorData):
    """``(Phi, delta)`` where the equivariance identity may fail by scalars."""

    def rescaled(self, lam: Mapping[GroupElement, Scalar]) -> "CommutingFunctorDatum":
        """``delta'_g = lam(g) delta_g``."""
        return CommutingFunctorDatum(self.act, self.tau, {g: d * lam[g] for g, d in self.delta.items()})

    def compose(self, other: "CommutingFunctorDatum") -> "CommutingFunctorDatum":
        """``Phi_1 Phi_2`` with ``delta_g = delta^1_g Phi_2 o Phi_1 delta^2_g``."""
        A = self.act.algebra
        # twisting by tau_2 then tau_1 is twisting by tau_2 o tau_1
        tau = other.tau @ self.tau
        delta = {g: A.mul(other.delta[g], other.tau(self.delta[g])) for g in self.delta}
        return CommutingFunctorDatum(self.act, tau, delta)

    def to_json(self) -> dict:
        G, F = self.act.group, self.act.field
        return {"F": self.tau.matrix.to_json(),
                "delta": {G.key(g): [F.to_json(v) for v in d.flat()] for g, d in self.delta.items()}}

    @classmethod
    def from_json(cls, act: ModuleCategoryAction, obj: dict) -> "CommutingFunctorDatum":
        A, G = act.algebra, act.group
        tau = AlgebraMap(A, A, Matrix.from_json(A.field, obj["F"]))
        delta = {g: A.unit for g in G.elements}
        for key, coeffs in obj.get("delta", {}).items():
            delta[G.coerce(key)] = Matrix(A.field, [[A.field.from_json(v)] for v in coeffs], A.dim, 1)
        return cls(act, tau, delta)


class ObstructionUndefined(ValueError):
    pass


def _ratio(lhs: Matrix, rhs: Matrix):
    """The scalar ``s`` with ``lhs = s * rhs``, or ``None``."""
    F = lhs.field
    for a, b in zip(lhs.flat(), rhs.flat()):
        if not F.is_zero(b):
            s = F.mul(a, F.inv(b))
            break
    else:
        return None
    return s if lhs == rhs * s else None


def obstruction_cocycle(datum: CommutingFunctorDatum, probes: Sequence[ModuleRep]) -> Cocycle2:
    """Extract ``sigma_F`` as one scalar per pair, identical on every probe."""
    act = datum.act
    G, F = act.group, act.field
    bad = [G.key(g) for g in G.elements if not datum.delta_nat(g).at(probes[0]).is_invertible()]
    if bad:
        raise ValueError(f"delta is not invertible at {bad}")
    values = {}
    for g in G.elements:
        for h in G.elements:
            lhs, rhs = datum.sides(g, h)
            found = None
            for X in probes:
                s = _ratio(lhs.at(X), rhs.at(X))
                if s is None or (found is not None and s != found):
                    raise ObstructionUndefined("center larger than k; obstruction undefined")
                found = s
            values[(g, h)] = Scalar(F, found)
    return Cocycle2(G, F, values)


def center_is_field(act: ModuleCategoryAction) -> bool:
    return len(act.algebra.center()) == 1


def obstruction_class(datum: CommutingFunctorDatum, probes: Sequence[ModuleRep]):
    """``("trivial", lift)`` or ``("nontrivial class", None)``.

    The lift rescales ``delta`` by the inverse of a coboundary witness and is
    checked against the equivariance identity before it is returned.
    """
    sigma = obstruction_cocycle(datum, probes)
    witness = is_coboundary(sigma)
    if witness is None:
        return "nontrivial class", None
    lift = datum.rescaled({g: v.inverse() for g, v in witness.items()})
    rep = lift.validate(probes)
    if not rep.ok:
        raise ValueError(f"corrected datum is not equivariant: {[c.name for c in rep.failures()]}")
    return "trivial", lift


def obstruction_report(datum: CommutingFunctorDatum, probes: Sequence[ModuleRep], *, seed: int = 0) -> Report:
    """Cocycle, class, gauge covariance under a random rescaling, and a lift
    when the class is trivial."""
    act = datum.act
    G, F = act.group, act.field
    rep = Report("obstruction")
    sigma = obstruction_cocycle(datum, probes)
    rep.data["sigma"] = sigma.to_json()
    rep.data["center_is_k"] = center_is_field(act)
    rep.add("sigma_is_2cocycle", is_2cocycle(sigma))
    rng = random.Random(seed)
    nonzero = [x for x in F.elements() if x] if F.is_finite else [F(v) for v in range(1, 8)]
    lam = {g: rng.choice(nonzero) for g in G.elements}
    sigma2 = obstruction_cocycle(datum.rescaled(lam), probes)
    rep.add("gauge_covariance", sigma2 == sigma * Cocycle2.coboundary(G, lam))
    verdict, lift = obstruction_class(datum, probes)
    rep.data["class"] = verdict
    if lift is not None:
        rep.add("lift_is_equivariant", True)
        rep.data["lift_delta"] = lift.to_json()["delta"]
    return rep


def exhaustive_coboundary_search(sigma: Cocycle2) -> tuple[int, list]:
    """All ``lam: G -> k^*`` over a finite field with ``d(lam) = sigma``.

    Returns the number of candidates examined and the witnesses found.
    """
    G, F = sigma.group, sigma.field
    if not F.is_finite:
        raise ValueError("exhaustive search needs a finite field")
    units = [x for x in F.elements() if x]
    found = []
    count = 0
    for values in itertools.product(units, repeat=G.order):
        count += 1
        lam = dict(zip(G.elements, values))
        if Cocycle2.coboundary(G, lam) == sigma:
            found.append(lam)
    return count, found


def multiplicativity_check(d1: CommutingFunctorDatum, d2: CommutingFunctorDatum,
                           probes: Sequence[ModuleRep]) -> bool:
    """The class of ``sigma_{F_1 F_2}`` is the product of the two classes."""
    s1 = obstruction_cocycle(d1, probes)
    s2 = obstruction_cocycle(d2, probes)
    s12 = obstruction_cocycle(d1.compose(d2), probes)
    return is_coboundary(s12 * (s1 * s2).inverse()) is not None


# ---------------------------------------------------------------------------
# kernel of the forgetful map


def character_functor(act: ModuleCategoryAction, psi_index: int) -> CommutingFunctorDatum:
    """``(Id, (chi(g) F_g)_g)``."""
    chi = character_group(act.group, act.field)[psi_index]
    A = act.algebra
    return CommutingFunctorDatum(act, AlgebraMap.identity(A), {g: A.scalar(chi(g)) for g in act.group.elements})


def equivariant_isomorphism(d1: EquivariantFunctorData, d2: EquivariantFunctorData, **kw) -> Matrix | None:
    """A unit ``z`` implementing ``phi: Id -> Id`` with
    ``F_g phi o delta_g = delta'_g o phi F_g`` (both functors the identity).

    Natural endomorphisms of the identity are central elements; the identity
    reads ``z d_g = d'_g rho(g^-1)(z)`` in the algebra.
    """
    act = d1.act
    A, G = act.algebra, act.group
    Z = act.algebra.center()
    if not Z:
        return None
    F = A.field
    cols = []
    for z in Z:
        parts = []
        for g in G.elements:
            lhs = A.mul(z, d1.delta[g])
            rhs = A.mul(d2.delta[g], act.weak.rho[G.inv(g)](z))
            parts.append(lhs - rhs)
        col = parts[0]
        for p in parts[1:]:
            col = col.vstack(p)
        cols.append(col)
    system = Matrix.hstack_all(F, cols, cols[0].nrows)
    space = []
    for v in system.nullspace():
        z = A.zero
        for c, basis_z in zip(v.flat(), Z):
            z = z + basis_z * c
        space.append(z)
    return find_unit_in_span(A, space, **kw)


def match_character(act: ModuleCategoryAction, delta: Mapping[GroupElement, Matrix]) -> int | None:
    """Index of the character ``chi`` with ``delta_g = chi(g) 1``, if any."""
    A, G, F = act.algebra, act.group, act.field
    vals = {}
    for g in G.elements:
        d = delta[g]
        s = _ratio(d, A.unit)
        if s is None:
            return None
        vals[g] = Scalar(F, s)
    chars = character_group(G, F)
    for i, chi in enumerate(chars):
        if all(chi(g) == vals[g] for g in G.elements):
            return i
    return None


def kernel_check(act: ModuleCategoryAction, supplied: Sequence[Mapping] = (), **kw) -> Report:
    """Distinct characters give non-isomorphic equivariant functors, their
    obstruction cocycles are identically 1, and supplied data on the identity
    functor are matched to characters."""
    G = act.group
    rep = Report("kernel-check")
    chars = character_group(G, act.field)
    data = [character_functor(act, i) for i in range(len(chars))]
    probes = act.default_probes()
    one = act.field.one
    rep.add("characters_have_trivial_obstruction",
            all(v == one for d in data for v in obstruction_cocycle(d, probes).values.values()))
    collisions = []
    for i, j in itertools.combinations(range(len(chars)), 2):
        if equivariant_isomorphism(data[i], data[j], **kw) is not None:
            collisions.append([i, j])
    rep.add("characters_pairwise_non_isomorphic", not collisions,
            {"isomorphic_pairs": collisions} if collisions else None)
    rep.data["center_is_k"] = center_is_field(act)
    rep.data["characters"] = len(chars)
    matches = [match_character(act, d) for d in supplied]
    if supplied:
        rep.add("supplied_data_matched", all(m is not None for m in matches), {"matches": matches})
    return rep

"""Finite abelian groups, their characters and 2-cocycles with scalar values.

Groups are products of cyclic groups ``Z/d_1 x ... x Z/d_r`` and elements
are exponent tuples. Characters take values in a chosen field.

>>> from equivalg.scalar import PrimeField
>>> G = FinAbGroup((2,))
>>> [chi(G.generators[0]) for chi in character_group(G, PrimeField(5))]
[1, 4]
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from math import lcm
from typing import Iterable, Mapping

from .intlin import solve_mod
from .scalar import Field, FieldError, Scalar, primitive_root_of_unity

GroupElement = tuple


@dataclass(frozen=True)
class FinAbGroup:
    cyclic_orders: tuple[int, ...]

    def __post_init__(self):
        orders = tuple(int(d) for d in self.cyclic_orders)
        if any(d < 1 for d in orders):
            raise ValueError("cyclic orders must be positive")
        object.__setattr__(self, "cyclic_orders", orders)

    @cached_property
    def elements(self) -> list[GroupElement]:
        """All elements in lexicographic order of exponents."""
        return list(itertools.product(*(range(d) for d in self.cyclic_orders)))

    @cached_property
    def _index(self) -> dict:
        return {g: i for i, g in enumerate(self.elements)}

    def index(self, g: GroupElement) -> int:
        return self._index[g]

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def exponent(self) -> int:
        return lcm(*self.cyclic_orders) if self.cyclic_orders else 1

    @property
    def identity(self) -> GroupElement:
        return tuple(0 for _ in self.cyclic_orders)

    @property
    def generators(self) -> list[GroupElement]:
        r = len(self.cyclic_orders)
        return [tuple(int(i == j) for j in range(r)) for i in range(r)]

    def mul(self, g: GroupElement, h: GroupElement) -> GroupElement:
        return tuple((a + b) % d for a, b, d in zip(g, h, self.cyclic_orders))

    def inv(self, g: GroupElement) -> GroupElement:
        return tuple(-a % d for a, d in zip(g, self.cyclic_orders))

    def power(self, g: GroupElement, k: int) -> GroupElement:
        return tuple(a * k % d for a, d in zip(g, self.cyclic_orders))

    def prod(self, gs: Iterable[GroupElement]) -> GroupElement:
        out = self.identity
        for g in gs:
            out = self.mul(out, g)
        return out

    def element_order(self, g: GroupElement) -> int:
        k = 1
        while self.power(g, k) != self.identity:
            k += 1
        return k

    def cyclic_generator(self) -> GroupElement | None:
        """A generator if the group is cyclic, else ``None``."""
        for g in self.elements:
            if self.element_order(g) == self.order:
                return g
        return None

    def coerce(self, g) -> GroupElement:
        if isinstance(g, str):
            g = [int(v) for v in g.split(",")] if g else []
        if isinstance(g, int):
            g = [g]
        g = tuple(int(a) % d for a, d in zip(g, self.cyclic_orders))
        if len(g) != len(self.cyclic_orders):
            raise ValueError(f"element {g} has the wrong length")
        return g

    @staticmethod
    def key(g: GroupElement) -> str:
        return ",".join(str(a) for a in g)

    def to_json(self) -> dict:
        return {"cyclic_orders": list(self.cyclic_orders)}

    @classmethod
    def from_json(cls, obj: Mapping) -> "FinAbGroup":
        return cls(tuple(obj["cyclic_orders"]))


@dataclass(frozen=True)
class Character:
    """A homomorphism ``G -> k^*`` given by its values on the generators."""

    group: FinAbGroup
    field: Field
    gen_values: tuple

    def __call__(self, g: GroupElement) -> Scalar:
        out = self.field.one
        for v, a in zip(self.gen_values, g):
            out = out * v ** a
        return out

    def __mul__(self, other: "Character") -> "Character":
        return Character(self.group, self.field, tuple(a * b for a, b in zip(self.gen_values, other.gen_values)))

    def inverse(self) -> "Character":
        return Character(self.group, self.field, tuple(v.inverse() for v in self.gen_values))

    def is_trivial(self) -> bool:
        return all(v == 1 for v in self.gen_values)

    def values(self) -> list[Scalar]:
        return [self(g) for g in self.group.elements]

    def __repr__(self):
        return f"Character({list(self.gen_values)})"


def character_group(G: FinAbGroup, field: Field) -> list[Character]:
    """All characters, ordered lexicographically by generator exponents.

    Character ``a`` sends generator ``i`` to ``zeta_{d_i} ** a_i``, with
    ``zeta_d`` the canonical primitive root. The trivial character is first.
    """
    roots = [primitive_root_of_unity(field, d) for d in G.cyclic_orders]
    out = []
    for exps in G.elements:
        out.append(Character(G, field, tuple(z ** a for z, a in zip(roots, exps))))
    return out


def character_index(chars: list[Character], chi: Character) -> int:
    for i, c in enumerate(chars):
        if c.gen_values == chi.gen_values:
            return i
    raise ValueError("character not in list")


def evaluation_pairing(G: FinAbGroup, field: Field) -> dict:
    """Table ``(g, i) -> chi_i(g)`` over all elements and characters."""
    chars = character_group(G, field)
    return {(g, i): chi(g) for g in G.elements for i, chi in enumerate(chars)}


def evaluation_is_bijective(G: FinAbGroup, field: Field) -> bool:
    """Check that ``g -> (chi -> chi(g))`` is a bijection ``G -> dual of dual``.

    Each evaluation is multiplicative in the character, distinct elements give
    distinct evaluations, and the counts agree.
    """
    chars = character_group(G, field)
    index = {c.gen_values: i for i, c in enumerate(chars)}
    rows = set()
    for g in G.elements:
        for a in chars:
            for b in chars:
                prod = chars[index[(a * b).gen_values]]
                if prod(g) != a(g) * b(g):
                    return False
        rows.add(tuple(c(g) for c in chars))
    return len(rows) == G.order == len(chars)


# ---------------------------------------------------------------------------
# 2-cocycles


@dataclass
class Cocycle2:
    """A function ``G x G -> k^*`` stored as a full table."""

    group: FinAbGroup
    field: Field
    values: dict

    @classmethod
    def from_triples(cls, G: FinAbGroup, field: Field, triples) -> "Cocycle2":
        vals = {(g, h): field.one for g in G.elements for h in G.elements}
        for g, h, s in triples:
            vals[(G.coerce(g), G.coerce(h))] = field(s)
        return cls(G, field, vals)

    @classmethod
    def coboundary(cls, G: FinAbGroup, lam: Mapping) -> "Cocycle2":
        """``(g, h) -> lam(gh) lam(g)^-1 lam(h)^-1``."""
        field = next(iter(lam.values())).field
        vals = {(g, h): lam[G.mul(g, h)] / (lam[g] * lam[h]) for g in G.elements for h in G.elements}
        return cls(G, field, vals)

    def __call__(self, g, h) -> Scalar:
        return self.values[(g, h)]

    def __mul__(self, other: "Cocycle2") -> "Cocycle2":
        return Cocycle2(self.group, self.field, {k: v * other.values[k] for k, v in self.values.items()})

    def inverse(self) -> "Cocycle2":
        return Cocycle2(self.group, self.field, {k: v.inverse() for k, v in self.values.items()})

    def __eq__(self, other):
        return isinstance(other, Cocycle2) and self.values == other.values

    def is_trivial(self) -> bool:
        return all(v == 1 for v in self.values.values())

    def to_json(self) -> list:
        G = self.group
        return [[G.key(g), G.key(h), self.values[(g, h)].to_json()] for g in G.elements for h in G.elements]


def is_2cocycle(sigma: Cocycle2) -> bool:
    """Exhaustive check of ``s(gh,f) s(g,h) = s(g,hf) s(h,f)``."""
    G = sigma.group
    els = G.elements
    if any(not sigma(g, h) for g in els for h in els):
        return False
    for g in els:
        for h in els:
            for f in els:
                if sigma(G.mul(g, h), f) * sigma(g, h) != sigma(g, G.mul(h, f)) * sigma(h, f):
                    return False
    return True


def discrete_log(x: Scalar, generator: Scalar, order: int) -> int:
    power = x.field.one
    for k in range(order):
        if power == x:
            return k
        power = power * generator
    raise FieldError(f"{x} is not a root of unity of order dividing {order}")


def is_coboundary(sigma: Cocycle2) -> dict | None:
    """Decide whether ``sigma = d(lam)`` and return the canonical witness.

    Values of a cocycle that is a coboundary force every ``lam(g)`` to be a
    root of unity in the field, so the search happens in ``mu_N`` with ``N``
    the order of the torsion subgroup of ``k^*``: take discrete logarithms and
    solve the resulting system over ``Z/N``. Among all solutions the one
    with the smallest values (in group-element order) is returned.
    """
    G, F = sigma.group, sigma.field
    N = F.torsion_order
    omega = primitive_root_of_unity(F, N)
    els = G.elements
    idx = {g: i for i, g in enumerate(els)}
    rows, rhs = [], []
    for g in els:
        for h in els:
            s = sigma(g, h)
            try:
                log = discrete_log(s, omega, N)
            except FieldError:
                raise FieldError("cocycle values are not roots of unity; coboundary test undecidable") from None
            row = [0] * len(els)
            row[idx[G.mul(g, h)]] += 1
            row[idx[g]] -= 1
            row[idx[h]] -= 1
            rows.append(row)
            rhs.append(log)
    sols = solve_mod(rows, rhs, N)
    if not sols:
        return None
    candidates = [{g: omega ** x[idx[g]] for g in els} for x in sols]
    best = min(candidates, key=lambda lam: [lam[g].sort_key() for g in els])
    return best

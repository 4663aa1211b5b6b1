"""Exact scalars and dense matrices over prime and cyclotomic fields.

Two field families are supported:

* ``PrimeField(p)``: integers modulo a prime ``p``.
* ``CyclotomicField(n)``: Q(zeta_n), with elements stored as tuples of
  ``Fraction`` coefficients in the power basis of zeta_n, reduced modulo
  the n-th cyclotomic polynomial.

Matrices keep raw field values internally and hand out ``Scalar`` objects at
the boundary. All arithmetic is exact.

>>> F = PrimeField(13)
>>> A = Matrix.from_entries(F, [[1, 1], [1, 12]])
>>> exact_linear_solve(A, Matrix.column(F, [2, 0])).particular.to_ints()
[[1], [1]]
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import sympy


class FieldError(ValueError):
    """Raised for field-level failures such as missing roots of unity."""


def _prime_factors(n: int) -> list[int]:
    return sorted(sympy.factorint(n))


# ---------------------------------------------------------------------------
# Fields


class Field:
    """Common interface. Subclasses implement arithmetic on raw values."""

    is_finite: bool
    characteristic: int

    def __call__(self, value) -> "Scalar":
        return Scalar(self, self.coerce(value))

    @property
    def zero(self) -> "Scalar":
        return Scalar(self, self.zero_raw)

    @property
    def one(self) -> "Scalar":
        return Scalar(self, self.one_raw)

    def elements(self) -> Iterator["Scalar"]:
        for raw in self.raw_elements():
            yield Scalar(self, raw)

    def roots(self, coeffs: Sequence) -> list["Scalar"]:
        """Distinct roots in the field of the polynomial with the given
        coefficients (lowest degree first), sorted canonically."""
        coeffs = [self.coerce(c) for c in coeffs]
        found = []
        for factor, _ in self.factor_poly(coeffs):
            if len(factor) == 2:
                # monic linear factor x + a
                found.append(self.neg(factor[0]))
        found.sort(key=self.sort_key)
        return [Scalar(self, r) for r in found]

    def pow_raw(self, a, e: int):
        if e < 0:
            a, e = self.inv(a), -e
        result = self.one_raw
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result


@dataclass(frozen=True)
class PrimeField(Field):
    p: int

    is_finite = True

    def __post_init__(self):
        if not isinstance(self.p, int) or not sympy.isprime(self.p):
            raise FieldError(f"{self.p} is not prime")

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def size(self) -> int:
        return self.p

    @property
    def torsion_order(self) -> int:
        return self.p - 1

    zero_raw = 0
    one_raw = 1

    def coerce(self, value) -> int:
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldError(f"cannot mix {value.field} and {self}")
            return value.raw
        if isinstance(value, bool):
            return int(value)
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, Fraction):
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        if isinstance(value, str):
            return self.coerce(Fraction(value))
        raise TypeError(f"cannot coerce {value!r} into {self}")

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def is_zero(self, a) -> bool:
        return a == 0

    def dot(self, xs, ys):
        return sum(x * y for x, y in zip(xs, ys)) % self.p

    def raw_elements(self):
        return range(self.p)

    def sort_key(self, a):
        return a

    def random_raw(self, rng: random.Random):
        return rng.randrange(self.p)

    def to_json(self, a):
        return a

    def from_json(self, obj):
        return self.coerce(obj)

    def fmt(self, a) -> str:
        return str(a)

    def spec(self) -> dict:
        return {"prime": self.p}

    def __str__(self):
        return f"F_{self.p}"

    def factor_poly(self, coeffs):
        x = sympy.Symbol("x")
        poly = sympy.Poly(list(reversed([int(c) for c in coeffs])), x, modulus=self.p)
        out = []
        for fac, mult in poly.factor_list()[1]:
            c = [int(v) % self.p for v in reversed(fac.all_coeffs())]
            lead_inv = self.inv(c[-1])
            out.append(([self.mul(v, lead_inv) for v in c], mult))
        return out


@dataclass(frozen=True)
class CyclotomicField(Field):
    n: int

    is_finite = False
    characteristic = 0
    size = None

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise FieldError(f"invalid cyclotomic index {self.n}")

    @cached_property
    def modulus(self) -> tuple[int, ...]:
        """Coefficients of Phi_n, lowest degree first."""
        x = sympy.Symbol("x")
        return tuple(int(c) for c in reversed(sympy.Poly(sympy.cyclotomic_poly(self.n, x), x).all_coeffs()))

    @property
    def degree(self) -> int:
        return len(self.modulus) - 1

    @property
    def torsion_order(self) -> int:
        return self.n if self.n % 2 == 0 else 2 * self.n

    @property
    def zero_raw(self):
        return (Fraction(0),) * self.degree

    @property
    def one_raw(self):
        return (Fraction(1),) + (Fraction(0),) * (self.degree - 1)

    @property
    def zeta(self) -> "Scalar":
        """The generator zeta_n."""
        return Scalar(self, self._reduce([Fraction(0), Fraction(1)]))

    def _reduce(self, coeffs) -> tuple:
        deg = self.degree
        c = list(coeffs) + [Fraction(0)] * max(0, deg - len(coeffs))
        mod = self.modulus
        for k in range(len(c) - 1, deg - 1, -1):
            lead = c[k]
            if lead:
                shift = k - deg
                for i in range(deg):
                    if mod[i]:
                        c[shift + i] -= lead * mod[i]
                c[k] = Fraction(0)
        return tuple(c[:deg])

    def coerce(self, value):
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldError(f"cannot mix {value.field} and {self}")
            return value.raw
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return (Fraction(value),) + (Fraction(0),) * (self.degree - 1)
        if isinstance(value, bool):
            return self.coerce(int(value))
        if isinstance(value, str):
            return self.coerce(Fraction(value))
        if isinstance(value, (list, tuple)):
            return self._reduce([Fraction(v) for v in value])
        raise TypeError(f"cannot coerce {value!r} into {self}")

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple(x - y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)

    def mul(self, a, b):
        if not any(b):
            return self.zero_raw
        prod = [Fraction(0)] * (2 * self.degree - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return self._reduce(prod)

    def inv(self, a):
        if not any(a):
            raise ZeroDivisionError("inverse of zero")
        deg = self.degree
        # columns: a * zeta^j
        cols = []
        basis = [0] * deg
        for j in range(deg):
            e = list(basis)
            e[j] = 1
            cols.append(self.mul(a, self.coerce(e)))
        rows = [[cols[j][i] for j in range(deg)] + [Fraction(int(i == 0))] for i in range(deg)]
        for col in range(deg):
            piv = next(r for r in range(col, deg) if rows[r][col])
            rows[col], rows[piv] = rows[piv], rows[col]
            pv = rows[col][col]
            rows[col] = [v / pv for v in rows[col]]
            for r in range(deg):
                if r != col and rows[r][col]:
                    f = rows[r][col]
                    rows[r] = [v - f * w for v, w in zip(rows[r], rows[col])]
        return tuple(rows[i][deg] for i in range(deg))

    def is_zero(self, a) -> bool:
        return not any(a)

    def dot(self, xs, ys):
        acc = self.zero_raw
        for x, y in zip(xs, ys):
            if any(x) and any(y):
                acc = self.add(acc, self.mul(x, y))
        return acc

    def raw_elements(self):
        raise FieldError(f"{self} is infinite")

    def sort_key(self, a):
        return (sum(abs(v.numerator) + v.denominator for v in a), tuple(-v for v in a))

    def random_raw(self, rng: random.Random):
        return tuple(Fraction(rng.randint(-2, 2)) for _ in range(self.degree))

    def to_json(self, a):
        vals = [str(v) if v.denominator != 1 else v.numerator for v in a]
        return vals

    def from_json(self, obj):
        return self.coerce(obj)

    def fmt(self, a) -> str:
        terms = []
        for k, v in enumerate(a):
            if v:
                terms.append(f"{v}" if k == 0 else f"{v}*z^{k}")
        return " + ".join(terms) if terms else "0"

    def spec(self) -> dict:
        return {"cyclotomic": self.n}

    def __str__(self):
        return f"Q(zeta_{self.n})"

    @cached_property
    def _sympy_field(self):
        ext = sympy.exp(2 * sympy.pi * sympy.I / self.n)
        K = sympy.QQ.algebraic_field(ext)
        if [int(c) for c in K.mod.to_list()] != list(reversed(self.modulus)):
            raise FieldError(f"sympy presents {self} with an unexpected primitive element")
        return K

    def factor_poly(self, coeffs):
        K = self._sympy_field
        x = sympy.Symbol("x")
        mod = K.mod.to_list()

        def to_anp(raw):
            rep = [sympy.QQ(v.numerator, v.denominator) for v in reversed(raw)]
            while rep and rep[0] == 0:
                rep.pop(0)
            return K.dtype(rep, mod, sympy.QQ)

        poly = sympy.Poly.from_list([to_anp(c) for c in reversed(coeffs)], x, domain=K)
        out = []
        for fac, mult in poly.factor_list()[1]:
            c = []
            for anp in reversed(fac.rep.to_list()):
                rep = [Fraction(int(v.numerator), int(v.denominator)) for v in reversed(anp.rep)]
                c.append(self._reduce(rep))
            lead_inv = self.inv(c[-1])
            out.append(([self.mul(v, lead_inv) for v in c], mult))
        return out


def parse_field(text: str) -> Field:
    """Parse ``prime:13`` or ``cyclotomic:12``."""
    kind, _, arg = text.partition(":")
    try:
        value = int(arg)
    except ValueError:
        raise FieldError(f"bad field spec {text!r}") from None
    if kind == "prime":
        return PrimeField(value)
    if kind == "cyclotomic":
        return CyclotomicField(value)
    raise FieldError(f"bad field spec {text!r}")


def field_from_json(obj: dict) -> Field:
    if "prime" in obj:
        return PrimeField(int(obj["prime"]))
    if "cyclotomic" in obj:
        return CyclotomicField(int(obj["cyclotomic"]))
    raise FieldError(f"bad field description {obj!r}")


# ---------------------------------------------------------------------------
# Scalars


class Scalar:
    """A field element with arithmetic operators."""

    __slots__ = ("field", "raw")

    def __init__(self, field: Field, raw):
        self.field = field
        self.raw = raw

    def _other(self, other):
        return self.field.coerce(other)

    def __add__(self, other):
        return Scalar(self.field, self.field.add(self.raw, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return Scalar(self.field, self.field.sub(self.raw, self._other(other)))

    def __rsub__(self, other):
        return Scalar(self.field, self.field.sub(self._other(other), self.raw))

    def __neg__(self):
        return Scalar(self.field, self.field.neg(self.raw))

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return other * self
        return Scalar(self.field, self.field.mul(self.raw, self._other(other)))

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        return Scalar(self.field, self.field.inv(self.raw))

    def __truediv__(self, other):
        return self * Scalar(self.field, self.field.inv(self._other(other)))

    def __rtruediv__(self, other):
        return Scalar(self.field, self._other(other)) * self.inverse()

    def __pow__(self, e: int):
        return Scalar(self.field, self.field.pow_raw(self.raw, e))

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.raw == other.raw
        try:
            return self.raw == self.field.coerce(other)
        except (TypeError, FieldError):
            return NotImplemented

    def __hash__(self):
        return hash((self.field, self.raw))

    def __bool__(self):
        return not self.field.is_zero(self.raw)

    def __int__(self):
        if not isinstance(self.field, PrimeField):
            raise TypeError("only prime-field scalars convert to int")
        return self.raw

    def sort_key(self):
        return self.field.sort_key(self.raw)

    def to_json(self):
        return self.field.to_json(self.raw)

    def multiplicative_order(self) -> int:
        """Order in the unit group; raises if infinite."""
        if not self:
            raise ZeroDivisionError("zero has no multiplicative order")
        N = self.field.torsion_order
        if self ** N != 1:
            raise FieldError("element is not a root of unity")
        order = N
        for q in _prime_factors(N):
            while order % q == 0 and self ** (order // q) == 1:
                order //= q
        return order

    def __repr__(self):
        return self.field.fmt(self.raw)


# ---------------------------------------------------------------------------
# Matrices


class Matrix:
    """Immutable dense matrix over a ``Field``."""

    __slots__ = ("field", "rows", "nrows", "ncols", "_hash")

    def __init__(self, field: Field, rows, nrows: int | None = None, ncols: int | None = None):
        self.field = field
        self.rows = tuple(tuple(r) for r in rows)
        self.nrows = len(self.rows) if nrows is None else nrows
        if ncols is None:
            ncols = len(self.rows[0]) if self.rows else 0
        self.ncols = ncols
        self._hash = None

    # construction -------------------------------------------------------
    @classmethod
    def from_entries(cls, field: Field, entries) -> "Matrix":
        entries = [list(r) for r in entries]
        ncols = len(entries[0]) if entries else 0
        return cls(field, [[field.coerce(v) for v in r] for r in entries], len(entries), ncols)

    @classmethod
    def zeros(cls, field: Field, m: int, n: int) -> "Matrix":
        z = field.zero_raw
        return cls(field, [[z] * n for _ in range(m)], m, n)

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        z, o = field.zero_raw, field.one_raw
        return cls(field, [[o if i == j else z for j in range(n)] for i in range(n)], n, n)

    @classmethod
    def column(cls, field: Field, values) -> "Matrix":
        return cls(field, [[field.coerce(v)] for v in values], len(values), 1)

    @classmethod
    def unit_vector(cls, field: Field, n: int, i: int) -> "Matrix":
        z, o = field.zero_raw, field.one_raw
        return cls(field, [[o if k == i else z] for k in range(n)], n, 1)

    @classmethod
    def block_diag(cls, field: Field, blocks: Sequence["Matrix"]) -> "Matrix":
        m = sum(b.nrows for b in blocks)
        n = sum(b.ncols for b in blocks)
        rows = [[field.zero_raw] * n for _ in range(m)]
        r0 = c0 = 0
        for b in blocks:
            for i, row in enumerate(b.rows):
                rows[r0 + i][c0:c0 + b.ncols] = row
            r0 += b.nrows
            c0 += b.ncols
        return cls(field, rows, m, n)

    @classmethod
    def from_blocks(cls, field: Field, grid: Sequence[Sequence["Matrix"]]) -> "Matrix":
        """Assemble a block matrix; every block must be given."""
        heights = [row[0].nrows for row in grid]
        widths = [b.ncols for b in grid[0]] if grid else []
        rows = []
        for bi, brow in enumerate(grid):
            for i in range(heights[bi]):
                line = []
                for b in brow:
                    line.extend(b.rows[i])
                rows.append(line)
        return cls(field, rows, sum(heights), sum(widths))

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.nrows != other.nrows:
            raise ValueError("row mismatch in hstack")
        return Matrix(self.field, [a + b for a, b in zip(self.rows, other.rows)], self.nrows, self.ncols + other.ncols)

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.ncols:
            raise ValueError("column mismatch in vstack")
        return Matrix(self.field, self.rows + other.rows, self.nrows + other.nrows, self.ncols)

    @classmethod
    def hstack_all(cls, field: Field, mats: Sequence["Matrix"], nrows: int) -> "Matrix":
        rows = [[] for _ in range(nrows)]
        ncols = 0
        for m in mats:
            for i in range(nrows):
                rows[i].extend(m.rows[i])
            ncols += m.ncols
        return cls(field, rows, nrows, ncols)

    # access -------------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, idx) -> Scalar:
        i, j = idx
        return Scalar(self.field, self.rows[i][j])

    def block(self, r0: int, r1: int, c0: int, c1: int) -> "Matrix":
        return Matrix(self.field, [row[c0:c1] for row in self.rows[r0:r1]], r1 - r0, c1 - c0)

    def col(self, j: int) -> "Matrix":
        return Matrix(self.field, [[row[j]] for row in self.rows], self.nrows, 1)

    def columns(self) -> list["Matrix"]:
        return [self.col(j) for j in range(self.ncols)]

    def flat(self) -> list:
        """Raw entries in row-major order."""
        return [v for row in self.rows for v in row]

    def to_ints(self) -> list[list[int]]:
        return [[int(Scalar(self.field, v)) for v in row] for row in self.rows]

    def to_json(self):
        return [[self.field.to_json(v) for v in row] for row in self.rows]

    @classmethod
    def from_json(cls, field: Field, obj) -> "Matrix":
        return cls(field, [[field.from_json(v) for v in row] for row in obj], len(obj), len(obj[0]) if obj else 0)

    # arithmetic ---------------------------------------------------------
    def _check_same(self, other: "Matrix"):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        add = self.field.add
        return Matrix(self.field, [[add(a, b) for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.nrows, self.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        sub = self.field.sub
        return Matrix(self.field, [[sub(a, b) for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.nrows, self.ncols)

    def __neg__(self) -> "Matrix":
        neg = self.field.neg
        return Matrix(self.field, [[neg(a) for a in r] for r in self.rows], self.nrows, self.ncols)

    def __mul__(self, scalar) -> "Matrix":
        s = self.field.coerce(scalar)
        mul = self.field.mul
        return Matrix(self.field, [[mul(s, a) for a in r] for r in self.rows], self.nrows, self.ncols)

    __rmul__ = __mul__

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other.rows)) if other.rows else [()] * other.ncols
        if not cols:
            cols = [()] * other.ncols
        dot = self.field.dot
        if self.ncols == 0:
            return Matrix.zeros(self.field, self.nrows, other.ncols)
        return Matrix(self.field, [[dot(r, c) for c in cols] for r in self.rows], self.nrows, other.ncols)

    @property
    def T(self) -> "Matrix":
        return Matrix(self.field, list(zip(*self.rows)) if self.rows else [], self.ncols, self.nrows)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, self.shape, self.rows))
        return self._hash

    def is_zero(self) -> bool:
        z = self.field.is_zero
        return all(z(v) for row in self.rows for v in row)

    def is_identity(self) -> bool:
        return self.nrows == self.ncols and self == Matrix.identity(self.field, self.nrows)

    def __repr__(self):
        body = "; ".join(" ".join(self.field.fmt(v) for v in row) for row in self.rows)
        return f"Matrix[{self.nrows}x{self.ncols}]({body})"

    # row reduction ------------------------------------------------------
    def rref(self) -> tuple["Matrix", list[int]]:
        rows, pivots = _rref(self.field, [list(r) for r in self.rows], self.ncols)
        return Matrix(self.field, rows, self.nrows, self.ncols), pivots

    def rank(self) -> int:
        return len(_rref(self.field, [list(r) for r in self.rows], self.ncols)[1])

    def nullspace(self) -> list["Matrix"]:
        """Kernel basis derived from the reduced echelon form: one vector per
        free column with a 1 in that position."""
        F = self.field
        rows, pivots = _rref(F, [list(r) for r in self.rows], self.ncols)
        free = [j for j in range(self.ncols) if j not in set(pivots)]
        basis = []
        for f in free:
            v = [F.zero_raw] * self.ncols
            v[f] = F.one_raw
            for r, pc in enumerate(pivots):
                v[pc] = F.neg(rows[r][f])
            basis.append(Matrix(F, [[x] for x in v], self.ncols, 1))
        return basis

    def column_space(self) -> list["Matrix"]:
        """Basis of the column span, in reduced form."""
        red, piv = self.T.rref()
        return [Matrix(self.field, [[v] for v in red.rows[i]], self.nrows, 1) for i in range(len(piv))]

    def is_invertible(self) -> bool:
        return self.nrows == self.ncols and self.rank() == self.nrows

    def inverse(self) -> "Matrix":
        n = self.nrows
        if n != self.ncols:
            raise ValueError("only square matrices are invertible")
        F = self.field
        aug = [list(r) + list(e) for r, e in zip(self.rows, Matrix.identity(F, n).rows)]
        rows, pivots = _rref(F, aug, 2 * n)
        if pivots[:n] != list(range(n)):
            raise ZeroDivisionError("matrix is singular")
        return Matrix(F, [r[n:] for r in rows], n, n)

    def solve(self, rhs: "Matrix") -> "LinearSolution":
        return exact_linear_solve(self, rhs)

    def trace(self) -> Scalar:
        F = self.field
        acc = F.zero_raw
        for i in range(min(self.nrows, self.ncols)):
            acc = F.add(acc, self.rows[i][i])
        return Scalar(F, acc)


def _rref(F: Field, rows: list[list], ncols: int) -> tuple[list[list], list[int]]:
    """In-place reduced row echelon form on raw rows."""
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    is_zero, mul, sub, inv = F.is_zero, F.mul, F.sub, F.inv
    prime = F.p if isinstance(F, PrimeField) else None
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if not is_zero(rows[i][c]):
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pinv = inv(rows[r][c])
        if prime is not None:
            rows[r] = [v * pinv % prime for v in rows[r]]
            prow = rows[r]
            for i in range(nrows):
                if i != r:
                    f = rows[i][c]
                    if f:
                        rows[i] = [(a - f * b) % prime for a, b in zip(rows[i], prow)]
        else:
            rows[r] = [mul(v, pinv) for v in rows[r]]
            prow = rows[r]
            for i in range(nrows):
                if i != r and not is_zero(rows[i][c]):
                    f = rows[i][c]
                    rows[i] = [sub(a, mul(f, b)) for a, b in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


@dataclass
class LinearSolution:
    """Solution set of ``A x = b``: ``particular`` is ``None`` when the system
    is inconsistent; ``kernel`` is a basis of the null space of ``A``."""

    particular: Matrix | None
    kernel: list[Matrix] = dc_field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return self.particular is not None


def exact_linear_solve(A: Matrix, b: Matrix) -> LinearSolution:
    """Solve ``A x = b`` exactly. ``b`` may have several columns, in which case
    the particular solution has matching columns."""
    F = A.field
    if b.nrows != A.nrows:
        raise ValueError("right-hand side has the wrong height")
    n, k = A.ncols, b.ncols
    aug = [list(r) + list(s) for r, s in zip(A.rows, b.rows)]
    rows, pivots = _rref(F, aug, n + k)
    kernel = A.nullspace()
    if any(p >= n for p in pivots):
        return LinearSolution(None, kernel)
    sol = [[F.zero_raw] * k for _ in range(n)]
    for r, pc in enumerate(pivots):
        sol[pc] = rows[r][n:]
    return LinearSolution(Matrix(F, sol, n, k), kernel)


def span_basis(field: Field, vectors: Iterable[Matrix], dim: int) -> list[Matrix]:
    """Reduced basis of the span of column vectors of length ``dim``."""
    vecs = list(vectors)
    if not vecs:
        return []
    return Matrix.hstack_all(field, vecs, dim).column_space()


def lincomb(field: Field, coeffs: Sequence, mats: Sequence[Matrix]) -> Matrix:
    """Linear combination of equally shaped matrices."""
    if not mats:
        raise ValueError("empty combination")
    m, n = mats[0].shape
    acc = [[field.zero_raw] * n for _ in range(m)]
    add, mul, is_zero = field.add, field.mul, field.is_zero
    for c, M in zip(coeffs, mats):
        c = field.coerce(c)
        if is_zero(c):
            continue
        for i, row in enumerate(M.rows):
            arow = acc[i]
            for j, v in enumerate(row):
                if not is_zero(v):
                    arow[j] = add(arow[j], mul(c, v))
    return Matrix(field, acc, m, n)


# ---------------------------------------------------------------------------
# Roots


def primitive_root_of_unity(field: Field, d: int) -> Scalar:
    """Canonical primitive d-th root of unity.

    Over F_p this is the smallest residue of exact order d. Over Q(zeta_n)
    it is a power of the generator of the torsion subgroup.
    """
    if d < 1 or field.torsion_order % d:
        raise FieldError("group does not split over field")
    if isinstance(field, PrimeField):
        for x in range(1, field.p):
            s = field(x)
            if s ** d == 1 and s.multiplicative_order() == d:
                return s
        raise FieldError("group does not split over field")  # pragma: no cover
    N = field.torsion_order
    gen = field.zeta if field.n % 2 == 0 else -field.zeta
    return gen ** (N // d)


def nth_root(x: Scalar, d: int) -> Scalar | None:
    """Canonical d-th root of ``x`` in its field, or ``None`` if there is none."""
    F = x.field
    if d < 1:
        raise ValueError("root degree must be positive")
    if not x:
        return F.zero
    if isinstance(F, PrimeField):
        for y in range(1, F.p):
            if F(y) ** d == x:
                return F(y)
        return None
    coeffs = [F.neg(x.raw)] + [F.zero_raw] * (d - 1) + [F.one_raw]
    roots = F.roots(coeffs)
    return roots[0] if roots else None

"""Exact linear algebra over the rationals and odd prime fields.

Everything in this package is a :class:`LinMap`: a dense matrix together
with an explicit factorisation of its domain and codomain into tensor
factors.  Indices flatten row-major with the leftmost factor most
significant, and entries are exact field elements, never floats.

Large composites (five-factor axiom checks on 48-dimensional objects)
are never materialised; :class:`Pipe` evaluates them column by column
on sparse vectors instead.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import prod
from typing import Iterable, Mapping, Sequence, Union


class ShapeError(ValueError):
    """Dimension lists of two maps do not line up."""


class NotInvertibleError(ValueError):
    """A square map has no inverse; carries the exact rank."""

    def __init__(self, message: str, rank: int):
        super().__init__(message)
        self.rank = rank


# ---------------------------------------------------------------------------
# scalars


class FpElement:
    """Residue in F_p.  Immutable; arithmetic checks the modulus."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        object.__setattr__(self, "v", v % p)
        object.__setattr__(self, "p", p)

    def __setattr__(self, *a):
        raise AttributeError("FpElement is immutable")

    def _coerce(self, other):
        if isinstance(other, FpElement):
            if other.p != self.p:
                raise ValueError(f"mixed moduli {self.p} and {other.p}")
            return other
        if isinstance(other, int):
            return FpElement(other, self.p)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else FpElement(self.v + o.v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else FpElement(self.v - o.v, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else FpElement(o.v - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else FpElement(self.v * o.v, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.v == 0:
            raise ZeroDivisionError("division by zero in F_p")
        return FpElement(self.v * pow(o.v, self.p - 2, self.p), self.p)

    def __neg__(self):
        return FpElement(-self.v, self.p)

    def __bool__(self):
        return self.v != 0

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __repr__(self):
        return f"{self.v}"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class RationalField:
    """The rationals; elements are ``fractions.Fraction``."""

    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def element(self, value) -> Fraction:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, (int, str)):
            return Fraction(value)
        raise TypeError(f"cannot read rational scalar from {value!r}")

    def format(self, x) -> str:
        return str(x)

    def to_json(self) -> dict:
        return {"kind": "rational"}

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """F_p for an odd prime p.  Characteristic 2 is excluded throughout."""

    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        if p == 2:
            raise ValueError("characteristic 2 is not supported")
        self.p = p
        self.zero = FpElement(0, p)
        self.one = FpElement(1, p)

    @property
    def characteristic(self) -> int:
        return self.p

    def from_int(self, n: int) -> FpElement:
        return FpElement(n, self.p)

    def element(self, value) -> FpElement:
        if isinstance(value, FpElement):
            if value.p != self.p:
                raise ValueError(f"scalar has modulus {value.p}, field has {self.p}")
            return value
        if isinstance(value, int):
            return FpElement(value, self.p)
        if isinstance(value, str):
            return FpElement(int(value), self.p)
        raise TypeError(f"cannot read F_{self.p} scalar from {value!r}")

    def format(self, x) -> str:
        return str(x.v)

    def to_json(self) -> dict:
        return {"kind": "prime", "p": self.p}

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


Field = Union[RationalField, PrimeField]


def field_from_json(spec: Mapping) -> Field:
    kind = spec.get("kind")
    if kind == "rational":
        return QQ
    if kind == "prime":
        return GF(int(spec["p"]))
    raise ValueError(f"unknown field spec {spec!r}")


# ---------------------------------------------------------------------------
# dense maps

import numpy as np


def _dims(dims: Sequence[int]) -> tuple[int, ...]:
    t = tuple(int(d) for d in dims)
    if not t or any(d < 1 for d in t):
        raise ShapeError(f"bad factor dimensions {dims!r}")
    return t


class LinMap:
    """Linear map between tensor products, stored as a dense exact matrix.

    ``entries[r, c]`` is the coefficient of codomain basis vector ``r``
    in the image of domain basis vector ``c``.
    """

    __slots__ = ("field", "dom", "cod", "entries", "_cols")

    def __init__(self, field: Field, dom: Sequence[int], cod: Sequence[int], entries):
        self.field = field
        self.dom = _dims(dom)
        self.cod = _dims(cod)
        arr = np.asarray(entries, dtype=object)
        if arr.shape != (prod(self.cod), prod(self.dom)):
            raise ShapeError(
                f"entries shape {arr.shape} does not match cod {self.cod} x dom {self.dom}"
            )
        arr.setflags(write=False)
        self.entries = arr
        self._cols: dict[int, tuple] = {}

    # -- construction -------------------------------------------------

    @classmethod
    def from_rows(cls, field: Field, dom, cod, rows: Iterable[Iterable]) -> "LinMap":
        data = [[field.element(x) for x in row] for row in rows]
        return cls(field, dom, cod, np.array(data, dtype=object))

    @classmethod
    def from_terms(cls, field: Field, dom, cod, terms: Mapping[tuple[int, int], object]) -> "LinMap":
        dom = _dims(dom)
        cod = _dims(cod)
        arr = np.full((prod(cod), prod(dom)), field.zero, dtype=object)
        for (r, c), v in terms.items():
            arr[r, c] = field.element(v)
        return cls(field, dom, cod, arr)

    @classmethod
    def identity(cls, field: Field, dims: Sequence[int]) -> "LinMap":
        dims = _dims(dims)
        n = prod(dims)
        arr = np.full((n, n), field.zero, dtype=object)
        for i in range(n):
            arr[i, i] = field.one
        return cls(field, dims, dims, arr)

    @classmethod
    def zero(cls, field: Field, dom, cod) -> "LinMap":
        dom = _dims(dom)
        cod = _dims(cod)
        return cls(field, dom, cod, np.full((prod(cod), prod(dom)), field.zero, dtype=object))

    # -- bookkeeping ---------------------------------------------------

    @property
    def dom_total(self) -> int:
        return prod(self.dom)

    @property
    def cod_total(self) -> int:
        return prod(self.cod)

    def reshape(self, dom=None, cod=None) -> "LinMap":
        """Re-bracket tensor factors without touching entries."""
        dom = self.dom if dom is None else _dims(dom)
        cod = self.cod if cod is None else _dims(cod)
        if prod(dom) != self.dom_total or prod(cod) != self.cod_total:
            raise ShapeError(
                f"reshape {self.dom}->{dom}, {self.cod}->{cod} changes total dimension"
            )
        return LinMap(self.field, dom, cod, self.entries)

    def __eq__(self, other):
        if not isinstance(other, LinMap):
            return NotImplemented
        return (
            self.field == other.field
            and self.dom_total == other.dom_total
            and self.cod_total == other.cod_total
            and bool(np.all(self.entries == other.entries))
        )

    __hash__ = None

    def __repr__(self):
        d = "x".join(map(str, self.dom))
        c = "x".join(map(str, self.cod))
        return f"LinMap({d} -> {c} over {self.field!r})"

    # -- sparse column access -------------------------------------------

    def column(self, j: int) -> tuple:
        """Nonzero (row, value) pairs of column ``j``, cached."""
        got = self._cols.get(j)
        if got is None:
            col = self.entries[:, j]
            got = tuple((int(r), col[r]) for r in np.flatnonzero(col != self.field.zero))
            self._cols[j] = got
        return got

    def apply_basis(self, j: int) -> dict[int, object]:
        return dict(self.column(j))

    def apply_sparse(self, vec: Mapping[int, object]) -> dict[int, object]:
        out: dict[int, object] = {}
        zero = self.field.zero
        for j, coeff in vec.items():
            for r, val in self.column(j):
                acc = out.get(r)
                out[r] = val * coeff if acc is None else acc + val * coeff
        return {r: v for r, v in out.items() if v != zero}


def compose(g: LinMap, f: LinMap) -> LinMap:
    """g after f.  Domains must match exactly in total dimension."""
    if g.field != f.field:
        raise ShapeError(f"mixed fields {g.field!r} and {f.field!r}")
    if f.cod_total != g.dom_total:
        raise ShapeError(
            f"cannot compose {g!r} after {f!r}: "
            f"inner dimensions {g.dom_total} and {f.cod_total} differ"
        )
    return LinMap(g.field, f.dom, g.cod, g.entries @ f.entries)


def kron(f: LinMap, g: LinMap, *rest: LinMap) -> LinMap:
    """Tensor product of maps; factor lists concatenate."""
    if f.field != g.field:
        raise ShapeError(f"mixed fields {f.field!r} and {g.field!r}")
    out = LinMap(f.field, f.dom + g.dom, f.cod + g.cod, np.kron(f.entries, g.entries))
    for r in rest:
        out = kron(out, r)
    return out


def swap(field: Field, m: int, n: int) -> LinMap:
    """The braiding e_i (x) e_j -> e_j (x) e_i on factors of size m, n."""
    terms = {}
    one = field.one
    for i in range(m):
        for j in range(n):
            terms[(j * m + i, i * n + j)] = one
    return LinMap.from_terms(field, (m, n), (n, m), terms)


def transpose(f: LinMap) -> LinMap:
    """Plain matrix transpose; domain and codomain factor lists trade places."""
    return LinMap(f.field, f.cod, f.dom, f.entries.T.copy())


# -- exact elimination -------------------------------------------------


def _rational_echelon(rows: list[list[Fraction]], ncols: int):
    """Fraction-free (Bareiss) forward elimination on integer-scaled rows.

    Returns (integer rows in echelon order, pivot column list).
    """
    work = []
    for row in rows:
        den = 1
        for x in row:
            den = den * x.denominator // _gcd(den, x.denominator)
        work.append([int(x * den) for x in row])
    m = len(work)
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, m) if work[i][c] != 0), None)
        if pr is None:
            continue
        work[r], work[pr] = work[pr], work[r]
        pivot = work[r][c]
        for i in range(r + 1, m):
            if any(work[i]):
                fi = work[i]
                fr = work[r]
                mult = fi[c]
                for k in range(len(fi)):
                    fi[k] = (pivot * fi[k] - mult * fr[k]) // prev
        pivots.append(c)
        prev = pivot
        r += 1
        if r == m:
            break
    return work, pivots


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a if a > 0 else -a


def rank(f: LinMap) -> int:
    """Exact rank, via Bareiss over the rationals or plain Gauss over F_p."""
    m, n = f.entries.shape
    if isinstance(f.field, RationalField):
        rows = [[Fraction(x) for x in f.entries[i, :]] for i in range(m)]
        _, pivots = _rational_echelon(rows, n)
        return len(pivots)
    rows = [list(f.entries[i, :]) for i in range(m)]
    return len(_fp_echelon(rows, n, f.field)[1])


def _fp_echelon(rows, ncols, field):
    m = len(rows)
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, m) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = field.one / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][c]:
                mult = rows[i][c]
                rows[i] = [a - mult * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return rows, pivots


def invert(f: LinMap) -> LinMap:
    """Exact inverse of a square map.

    Rationals go through fraction-free (Bareiss) elimination so all
    intermediate values stay integral; prime fields use ordinary
    Gauss-Jordan.  Raises :class:`NotInvertibleError` carrying the rank
    when the map is singular.
    """
    if f.dom_total != f.cod_total:
        raise ShapeError(f"cannot invert non-square {f!r}")
    n = f.dom_total
    if isinstance(f.field, RationalField):
        rows = []
        for i in range(n):
            row = [Fraction(x) for x in f.entries[i, :]]
            row.extend(Fraction(int(i == j)) for j in range(n))
            rows.append(row)
        work, pivots = _rational_echelon(rows, n)
        if len(pivots) < n:
            raise NotInvertibleError(f"map has rank {len(pivots)} < {n}", len(pivots))
        # Back-substitute in exact rationals on the integral echelon form.
        inv = [[Fraction(0)] * n for _ in range(n)]
        for col in range(n):
            sol = [Fraction(0)] * n
            for i in range(n - 1, -1, -1):
                s = Fraction(work[i][n + col])
                for k in range(i + 1, n):
                    s -= work[i][k] * sol[k]
                sol[i] = s / work[i][i]
            for i in range(n):
                inv[i][col] = sol[i]
        return LinMap(f.field, f.cod, f.dom, np.array(inv, dtype=object))
    rows = []
    for i in range(n):
        row = list(f.entries[i, :])
        row.extend(f.field.one if i == j else f.field.zero for j in range(n))
        rows.append(row)
    rows, pivots = _fp_echelon(rows, n, f.field)
    if len(pivots) < n:
        raise NotInvertibleError(f"map has rank {len(pivots)} < {n}", len(pivots))
    inv = [[rows[i][n + j] for j in range(n)] for i in range(n)]
    return LinMap(f.field, f.cod, f.dom, np.array(inv, dtype=object))


# ---------------------------------------------------------------------------
# lazy composites


def _as_stage(stage) -> tuple:
    if isinstance(stage, (LinMap, Pipe)):
        return (stage,)
    return tuple(stage)


class Pipe:
    """A composite of tensor stages, written outermost (last applied) first.

    ``Pipe(mu, (lam, mu), (delta, ident))`` is the map
    ``mu . (lam (x) mu) . (delta (x) ident)``, matching how composites
    read on paper.  Factors may be :class:`LinMap` or nested pipes.
    Application walks basis columns with sparse dictionaries, so huge
    intermediate Kronecker products are never built.
    """

    __slots__ = ("field", "stages", "dom", "cod")

    def __init__(self, *stages):
        if not stages:
            raise ShapeError("empty pipe")
        ordered = [_as_stage(s) for s in reversed(stages)]
        field = None
        for st in ordered:
            for factor in st:
                field = factor.field
                break
            if field is not None:
                break
        self.field = field
        self.stages = []
        current = None
        for st in ordered:
            dom = tuple(d for factor in st for d in factor.dom)
            cod = tuple(d for factor in st for d in factor.cod)
            if current is not None and prod(dom) != current:
                raise ShapeError(
                    f"stage domain {dom} does not continue previous codomain of size {current}"
                )
            if current is None:
                self.dom = dom
            current = prod(cod)
            widths = tuple(prod(factor.dom) for factor in st)
            strides = []
            acc = 1
            for factor in reversed(st):
                strides.append(acc)
                acc *= prod(factor.cod)
            self.stages.append((tuple(st), widths, tuple(reversed(strides))))
        self.cod = cod

    @property
    def dom_total(self) -> int:
        return prod(self.dom)

    @property
    def cod_total(self) -> int:
        return prod(self.cod)

    def apply_sparse(self, vec: Mapping[int, object]) -> dict[int, object]:
        zero = self.field.zero
        for factors, widths, strides in self.stages:
            out: dict[int, object] = {}
            for j, coeff in vec.items():
                # decompose j into per-factor subindices, leftmost most significant
                subs = []
                for w in reversed(widths):
                    subs.append(j % w)
                    j //= w
                subs.reverse()
                parts = [
                    factor.column(s) if isinstance(factor, LinMap) else tuple(factor.apply_basis(s).items())
                    for factor, s in zip(factors, subs)
                ]
                if any(not p for p in parts):
                    continue
                for combo in itertools.product(*parts):
                    r = 0
                    v = coeff
                    for (ri, vi), stride in zip(combo, strides):
                        r += ri * stride
                        v = v * vi
                    acc = out.get(r)
                    out[r] = v if acc is None else acc + v
            vec = {r: v for r, v in out.items() if v != zero}
        return vec

    def apply_basis(self, j: int) -> dict[int, object]:
        return self.apply_sparse({j: self.field.one})

    def to_linmap(self) -> LinMap:
        arr = np.full((self.cod_total, self.dom_total), self.field.zero, dtype=object)
        for j in range(self.dom_total):
            for r, v in self.apply_basis(j).items():
                arr[r, j] = v
        return LinMap(self.field, self.dom, self.cod, arr)


def maps_equal(lhs, rhs) -> int | None:
    """First flat basis index where two maps disagree, or None if equal.

    Accepts any mix of :class:`LinMap` and :class:`Pipe`; compares the
    flattened matrices column by column.
    """
    if lhs.dom_total != rhs.dom_total or lhs.cod_total != rhs.cod_total:
        raise ShapeError(
            f"cannot compare maps of shape {lhs.dom}->{lhs.cod} and {rhs.dom}->{rhs.cod}"
        )
    for j in range(lhs.dom_total):
        if lhs.apply_basis(j) != rhs.apply_basis(j):
            return j
    return None


def decompose_index(j: int, dims: Sequence[int]) -> tuple[int, ...]:
    """Split a flat index into per-factor indices (leftmost most significant)."""
    out = []
    for w in reversed(tuple(dims)):
        out.append(j % w)
        j //= w
    out.reverse()
    return tuple(out)

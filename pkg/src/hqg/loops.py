"""Finite loops with inverses, doubling of groups, and loop algebras.

A loop here is a finite quasigroup with two-sided identity; the
inverse-property (IP) loops additionally satisfy u^-1(uv) = v = (vu)u^-1.
Doubling a group G adjoins an order-2 generator and twists the product,
producing a (generally non-associative) IP loop of twice the order.  The
loop algebra over an exact field is then a Hopf quasigroup with grouplike
coproduct and the inverse map as antipode.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .exactlin import Field, LinMap, QQ
from .hopf_core import (
    AxiomResult,
    HopfQuasigroup,
    StructureError,
    ValidationReport,
    report,
)


@dataclass(frozen=True)
class FiniteLoop:
    """Cayley table data: ``table[i][j]`` is the index of element i * j."""

    order: int
    table: tuple[tuple[int, ...], ...]
    identity: int
    inverse: tuple[int, ...]
    labels: tuple[str, ...]

    def __post_init__(self):
        n = self.order
        object.__setattr__(self, "table", tuple(tuple(r) for r in self.table))
        object.__setattr__(self, "inverse", tuple(self.inverse))
        object.__setattr__(self, "labels", tuple(self.labels))
        if len(self.table) != n or any(len(r) != n for r in self.table):
            raise StructureError(f"table is not {n} x {n}")
        if len(self.inverse) != n or len(self.labels) != n:
            raise StructureError("inverse or label list has wrong length")
        if not 0 <= self.identity < n:
            raise StructureError(f"identity index {self.identity} out of range")

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def inv(self, i: int) -> int:
        return self.inverse[i]

    @classmethod
    def from_table(cls, table: Sequence[Sequence[int]], labels: Optional[Sequence[str]] = None):
        """Derive identity and inverses from a Cayley table."""
        n = len(table)
        ident = next(
            (e for e in range(n) if all(table[e][j] == j and table[j][e] == j for j in range(n))),
            None,
        )
        if ident is None:
            raise StructureError("table has no two-sided identity")
        inverse = []
        for i in range(n):
            inv = next((j for j in range(n) if table[i][j] == ident and table[j][i] == ident), None)
            if inv is None:
                raise StructureError(f"element {i} has no two-sided inverse")
            inverse.append(inv)
        if labels is None:
            labels = [f"e{i}" for i in range(n)]
        return cls(n, tuple(tuple(r) for r in table), ident, tuple(inverse), tuple(labels))


@dataclass(frozen=True)
class FiniteGroup(FiniteLoop):
    """A loop whose table is associative (checked by validate_group)."""


def validate_ip_loop(l: FiniteLoop) -> ValidationReport:
    """Latin-square rows/columns, identity, two-sided inverses, and both
    inverse-property identities, each with a concrete witness on failure."""
    n = l.order
    checks = []

    def latin(axis: str) -> AxiomResult:
        for i in range(n):
            row = l.table[i] if axis == "rows" else tuple(l.table[j][i] for j in range(n))
            if len(set(row)) != n:
                return AxiomResult(f"latin-{axis}", False, (i,))
        return AxiomResult(f"latin-{axis}", True)

    checks.append(latin("rows"))
    checks.append(latin("columns"))

    e = l.identity
    bad = next((i for i in range(n) if l.mul(e, i) != i or l.mul(i, e) != i), None)
    checks.append(AxiomResult("identity", bad is None, None if bad is None else (bad,)))

    bad = next(
        (i for i in range(n) if l.mul(i, l.inv(i)) != e or l.mul(l.inv(i), i) != e), None
    )
    checks.append(AxiomResult("two-sided-inverse", bad is None, None if bad is None else (bad,)))

    wit = next(
        (
            (i, j)
            for i in range(n)
            for j in range(n)
            if l.mul(l.inv(i), l.mul(i, j)) != j
        ),
        None,
    )
    checks.append(AxiomResult("inverse-property-left", wit is None, wit))
    wit = next(
        (
            (i, j)
            for i in range(n)
            for j in range(n)
            if l.mul(l.mul(j, i), l.inv(i)) != j
        ),
        None,
    )
    checks.append(AxiomResult("inverse-property-right", wit is None, wit))
    return report(checks)


def validate_group(g: FiniteLoop) -> ValidationReport:
    base = validate_ip_loop(g)
    n = g.order
    wit = next(
        (
            (i, j, k)
            for i in range(n)
            for j in range(n)
            for k in range(n)
            if g.mul(g.mul(i, j), k) != g.mul(i, g.mul(j, k))
        ),
        None,
    )
    return base + report(AxiomResult("associative", wit is None, wit))


def loop_associativity_witness(l: FiniteLoop) -> Optional[tuple[int, int, int]]:
    n = l.order
    return next(
        (
            (i, j, k)
            for i in range(n)
            for j in range(n)
            for k in range(n)
            if l.mul(l.mul(i, j), k) != l.mul(i, l.mul(j, k))
        ),
        None,
    )


# ---------------------------------------------------------------------------
# constructions


def chein_double(g: FiniteGroup) -> FiniteLoop:
    """Double a group on pairs (element, flag).

    Basis order puts all flag-0 elements first, so the flag is the
    high-order digit of the index.  With s = (-1)^b2 and t = (-1)^(b1+b2),
    the product of (x, b1) and (y, b2) is ((x^s y^t)^s, b1 xor b2); the
    result is an IP loop, non-associative whenever g is non-abelian.
    """
    n = g.order

    def power(x: int, sign: int) -> int:
        return x if sign == 1 else g.inv(x)

    table = []
    for a in range(2):
        for i in range(n):
            row = []
            for b in range(2):
                for j in range(n):
                    s = -1 if b else 1
                    t = -1 if (a + b) % 2 else 1
                    z = power(g.mul(power(i, s), power(j, t)), s)
                    row.append(((a + b) % 2) * n + z)
            table.append(row)
    inverse = []
    for a in range(2):
        for i in range(n):
            inverse.append(a * n + (g.inv(i) if a == 0 else i))
    labels = [g.labels[i] + ("u" if a else "") for a in range(2) for i in range(n)]
    return FiniteLoop(2 * n, tuple(tuple(r) for r in table), g.identity, tuple(inverse), tuple(labels))


def direct_product(a: FiniteGroup, b: FiniteGroup) -> FiniteGroup:
    na, nb = a.order, b.order

    def idx(i, j):
        return i * nb + j

    table = [
        [idx(a.mul(i, k), b.mul(j, l)) for k in range(na) for l in range(nb)]
        for i in range(na)
        for j in range(nb)
    ]
    labels = [f"{a.labels[i]}.{b.labels[j]}" for i in range(na) for j in range(nb)]
    return FiniteGroup(
        na * nb,
        tuple(tuple(r) for r in table),
        idx(a.identity, b.identity),
        tuple(idx(a.inv(i), b.inv(j)) for i in range(na) for j in range(nb)),
        tuple(labels),
    )


def builtin_group(name: str) -> FiniteGroup:
    """Named small groups.

    ``s3`` uses the fixed numbering: index 0 the identity, 1..3 the three
    transpositions (01), (02), (12), and 4, 5 the three-cycles sending
    0->1->2->0 and 0->2->1->0 respectively.  ``z<n>`` is cyclic of order n.
    """
    if name == "s3":
        perms = [
            (0, 1, 2),
            (1, 0, 2),
            (2, 1, 0),
            (0, 2, 1),
            (1, 2, 0),
            (2, 0, 1),
        ]
        index = {p: i for i, p in enumerate(perms)}

        def comp(p, q):  # apply q first, then p
            return tuple(p[q[x]] for x in range(3))

        table = [[index[comp(p, q)] for q in perms] for p in perms]
        return FiniteGroup.from_table(table, labels=[f"s{i}" for i in range(6)])
    if name.startswith("z") and name[1:].isdigit():
        n = int(name[1:])
        if n < 1:
            raise StructureError("cyclic group needs order >= 1")
        table = [[(i + j) % n for j in range(n)] for i in range(n)]
        return FiniteGroup.from_table(table, labels=[str(i) for i in range(n)])
    raise StructureError(f"unknown group name {name!r}")


def loop_algebra(l: FiniteLoop, field: Field = QQ) -> HopfQuasigroup:
    """Linearise an IP loop: grouplike coproduct, inverse map as antipode.

    Refuses non-IP input, since the antipode laws reduce exactly to the
    inverse-property identities.
    """
    rep = validate_ip_loop(l)
    if not rep.ok:
        raise StructureError(
            "loop is not an inverse-property loop: "
            + ", ".join(c.axiom for c in rep.failures())
        )
    n = l.order
    one = field.one
    unit = LinMap.from_terms(field, (1,), (n,), {(l.identity, 0): one})
    product = LinMap.from_terms(
        field, (n, n), (n,), {(l.mul(i, j), i * n + j): one for i in range(n) for j in range(n)}
    )
    counit = LinMap.from_terms(field, (n,), (1,), {(0, i): one for i in range(n)})
    coproduct = LinMap.from_terms(field, (n,), (n, n), {(i * n + i, i): one for i in range(n)})
    antipode = LinMap.from_terms(field, (n,), (n,), {(l.inv(i), i): one for i in range(n)})
    return HopfQuasigroup(unit, product, counit, coproduct, antipode, labels=l.labels)

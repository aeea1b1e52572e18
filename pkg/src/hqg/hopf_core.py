"""Hopf quasigroups and coquasigroups as exact matrix data, with validators.

A Hopf quasigroup is a unital (possibly non-associative) magma carrying a
counital coassociative coproduct and an antipode subject to two-sided
cancellation laws; a Hopf coquasigroup is the mirror image with an
associative product and a possibly non-coassociative coproduct.  All
axioms here are checked as exact matrix identities, evaluated column by
column so nothing bigger than the stored structure maps is ever built.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

from .exactlin import (
    Field,
    LinMap,
    NotInvertibleError,
    Pipe,
    ShapeError,
    compose,
    decompose_index,
    invert,
    kron,
    maps_equal,
    swap,
    transpose,
)


class StructureError(ValueError):
    """A structure's maps have the wrong shapes or fail a precondition."""


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class AxiomResult:
    axiom: str
    passed: bool
    witness: Optional[tuple[int, ...]] = None

    def __str__(self):
        if self.passed:
            return f"{self.axiom}: ok"
        return f"{self.axiom}: FAIL at basis input {self.witness}"


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple[AxiomResult, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> tuple[AxiomResult, ...]:
        return tuple(c for c in self.checks if not c.passed)

    def __getitem__(self, axiom: str) -> AxiomResult:
        for c in self.checks:
            if c.axiom == axiom:
                return c
        raise KeyError(axiom)

    def prefixed(self, prefix: str) -> "ValidationReport":
        return ValidationReport(
            tuple(AxiomResult(f"{prefix}/{c.axiom}", c.passed, c.witness) for c in self.checks)
        )

    def __add__(self, other: "ValidationReport") -> "ValidationReport":
        return ValidationReport(self.checks + other.checks)

    def __str__(self):
        return "\n".join(str(c) for c in self.checks)

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "checks": [
                {
                    "axiom": c.axiom,
                    "passed": c.passed,
                    "witness": list(c.witness) if c.witness is not None else None,
                }
                for c in self.checks
            ],
        }


def check_identity(axiom: str, lhs, rhs) -> AxiomResult:
    """Compare two (possibly lazy) maps; witness is the failing basis input."""
    j = maps_equal(lhs, rhs)
    if j is None:
        return AxiomResult(axiom, True)
    return AxiomResult(axiom, False, decompose_index(j, lhs.dom))


def report(*results: Union[AxiomResult, Iterable[AxiomResult], ValidationReport]) -> ValidationReport:
    out: list[AxiomResult] = []
    for r in results:
        if isinstance(r, AxiomResult):
            out.append(r)
        elif isinstance(r, ValidationReport):
            out.extend(r.checks)
        else:
            out.extend(r)
    return ValidationReport(tuple(out))


# ---------------------------------------------------------------------------
# structure data


def _expect_shape(name: str, m: LinMap, dom, cod):
    if m.dom != tuple(dom) or m.cod != tuple(cod):
        raise StructureError(
            f"{name} must be {tuple(dom)} -> {tuple(cod)}, got {m.dom} -> {m.cod}"
        )


@dataclass(frozen=True, eq=False)
class UnitalMagma:
    unit: LinMap
    product: LinMap

    def __post_init__(self):
        n = self.product.cod_total
        _expect_shape("unit", self.unit, (1,), (n,))
        _expect_shape("product", self.product, (n, n), (n,))

    @property
    def dim(self) -> int:
        return self.product.cod_total

    @property
    def field(self) -> Field:
        return self.product.field


@dataclass(frozen=True, eq=False)
class Comonoid:
    counit: LinMap
    coproduct: LinMap

    def __post_init__(self):
        n = self.coproduct.dom_total
        _expect_shape("counit", self.counit, (n,), (1,))
        _expect_shape("coproduct", self.coproduct, (n,), (n, n))

    @property
    def dim(self) -> int:
        return self.coproduct.dom_total

    @property
    def field(self) -> Field:
        return self.coproduct.field


@dataclass(frozen=True, eq=False)
class HopfStructure:
    """Shared shape of both kinds: five structure maps on one based space."""

    unit: LinMap
    product: LinMap
    counit: LinMap
    coproduct: LinMap
    antipode: LinMap
    labels: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        n = self.product.cod_total
        _expect_shape("unit", self.unit, (1,), (n,))
        _expect_shape("product", self.product, (n, n), (n,))
        _expect_shape("counit", self.counit, (n,), (1,))
        _expect_shape("coproduct", self.coproduct, (n,), (n, n))
        _expect_shape("antipode", self.antipode, (n,), (n,))
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))
            if len(self.labels) != n:
                raise StructureError(f"{len(self.labels)} labels for dimension {n}")
        fields = {m.field for m in self.maps()}
        if len(fields) != 1:
            raise StructureError("structure maps live over different fields")

    def maps(self) -> tuple[LinMap, ...]:
        return (self.unit, self.product, self.counit, self.coproduct, self.antipode)

    @property
    def dim(self) -> int:
        return self.product.cod_total

    @property
    def field(self) -> Field:
        return self.product.field

    @property
    def magma(self) -> UnitalMagma:
        return UnitalMagma(self.unit, self.product)

    @property
    def comonoid(self) -> Comonoid:
        return Comonoid(self.counit, self.coproduct)

    def ident(self) -> LinMap:
        return LinMap.identity(self.field, (self.dim,))

    def braid(self) -> LinMap:
        return swap(self.field, self.dim, self.dim)

    def relabel(self, labels: Optional[Sequence[str]]) -> "HopfStructure":
        return type(self)(
            self.unit, self.product, self.counit, self.coproduct, self.antipode,
            tuple(labels) if labels is not None else None,
        )

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return all(a == b for a, b in zip(self.maps(), other.maps()))

    __hash__ = None

    def __repr__(self):
        return f"{type(self).__name__}(dim={self.dim}, field={self.field!r})"


class HopfQuasigroup(HopfStructure):
    """Non-associative side: unital magma + comonoid + antipode."""


class HopfCoquasigroup(HopfStructure):
    """Associative side: monoid + counital comagma + antipode."""


# ---------------------------------------------------------------------------
# axiom suites


def _unit_checks(h) -> list[AxiomResult]:
    ident = h.ident()
    return [
        check_identity("unit-left", Pipe(h.product, (h.unit, ident)), ident),
        check_identity("unit-right", Pipe(h.product, (ident, h.unit)), ident),
    ]


def _counit_checks(h) -> list[AxiomResult]:
    ident = h.ident()
    return [
        check_identity("counit-left", Pipe((h.counit, ident), h.coproduct), ident),
        check_identity("counit-right", Pipe((ident, h.counit), h.coproduct), ident),
    ]


def _bimonoid_checks(h) -> list[AxiomResult]:
    ident = h.ident()
    eta, mu, eps, dlt = h.unit, h.product, h.counit, h.coproduct
    unit_k = LinMap.identity(h.field, (1,))
    # coproduct of a product multiplies pairwise through the middle braiding
    tensor_delta = Pipe((ident, h.braid(), ident), (dlt, dlt))
    return [
        check_identity("counit-of-unit", Pipe(eps, eta), unit_k),
        check_identity("counit-multiplicative", Pipe(eps, mu), Pipe((eps, eps))),
        check_identity("unit-comultiplicative", Pipe(dlt, eta), Pipe((eta, eta))),
        check_identity("coproduct-multiplicative", Pipe(dlt, mu), Pipe((mu, mu), tensor_delta)),
    ]


def validate_unital_magma(m: UnitalMagma) -> ValidationReport:
    ident = LinMap.identity(m.field, (m.dim,))
    return report(
        check_identity("unit-left", Pipe(m.product, (m.unit, ident)), ident),
        check_identity("unit-right", Pipe(m.product, (ident, m.unit)), ident),
    )


def validate_comonoid(c: Comonoid) -> ValidationReport:
    ident = LinMap.identity(c.field, (c.dim,))
    return report(
        check_identity("counit-left", Pipe((c.counit, ident), c.coproduct), ident),
        check_identity("counit-right", Pipe((ident, c.counit), c.coproduct), ident),
        check_identity(
            "coassociative",
            Pipe((c.coproduct, ident), c.coproduct),
            Pipe((ident, c.coproduct), c.coproduct),
        ),
    )


def validate_hopf_quasigroup(h: HopfQuasigroup) -> ValidationReport:
    """Unital magma + comonoid + bimonoid compatibility + the four
    two-sided antipode cancellation identities."""
    ident = h.ident()
    eta, mu, eps, dlt, lam = h.maps()
    checks = _unit_checks(h) + _counit_checks(h)
    checks.append(
        check_identity(
            "coassociative",
            Pipe((dlt, ident), dlt),
            Pipe((ident, dlt), dlt),
        )
    )
    checks += _bimonoid_checks(h)
    eps_x_id = Pipe((eps, ident))
    id_x_eps = Pipe((ident, eps))
    checks += [
        # cancel an antipode on the left leg of a left product
        check_identity(
            "antipode-left-1", Pipe(mu, (lam, mu), (dlt, ident)), eps_x_id
        ),
        check_identity(
            "antipode-left-2", Pipe(mu, (ident, mu), (ident, lam, ident), (dlt, ident)), eps_x_id
        ),
        check_identity(
            "antipode-right-1", Pipe(mu, (mu, ident), (ident, lam, ident), (ident, dlt)), id_x_eps
        ),
        check_identity(
            "antipode-right-2", Pipe(mu, (mu, lam), (ident, dlt)), id_x_eps
        ),
    ]
    return report(checks)


def validate_hopf_coquasigroup(d: HopfCoquasigroup) -> ValidationReport:
    """Monoid + counital comagma + bimonoid compatibility + the four
    antipode co-cancellation identities."""
    ident = d.ident()
    eta, mu, eps, dlt, lam = d.maps()
    checks = _unit_checks(d) + _counit_checks(d)
    checks.append(
        check_identity(
            "associative",
            Pipe(mu, (mu, ident)),
            Pipe(mu, (ident, mu)),
        )
    )
    checks += _bimonoid_checks(d)
    id_x_eta = Pipe((ident, eta))
    eta_x_id = Pipe((eta, ident))
    checks += [
        check_identity(
            "antipode-coleft-1", Pipe((ident, mu), (dlt, lam), dlt), id_x_eta
        ),
        check_identity(
            "antipode-coleft-2", Pipe((ident, mu), (ident, lam, ident), (dlt, ident), dlt), id_x_eta
        ),
        check_identity(
            "antipode-coright-1", Pipe((mu, ident), (lam, dlt), dlt), eta_x_id
        ),
        check_identity(
            "antipode-coright-2", Pipe((mu, ident), (ident, lam, ident), (ident, dlt), dlt), eta_x_id
        ),
    ]
    return report(checks)


def validate_bimonoid(h: HopfStructure) -> ValidationReport:
    """The flavor-independent core: unit and counit laws plus the four
    product/coproduct compatibility identities, with no associativity,
    coassociativity, or antipode demands."""
    return report(_unit_checks(h) + _counit_checks(h) + _bimonoid_checks(h))


def validate(h: HopfStructure) -> ValidationReport:
    if isinstance(h, HopfQuasigroup):
        return validate_hopf_quasigroup(h)
    if isinstance(h, HopfCoquasigroup):
        return validate_hopf_coquasigroup(h)
    raise StructureError(f"cannot validate {type(h).__name__}")


def check_antipode_properties(h: HopfStructure) -> ValidationReport:
    """Anti(co)multiplicativity, unit/counit invariance and the two
    convolution identities of the antipode."""
    ident = h.ident()
    eta, mu, eps, dlt, lam = h.maps()
    c = h.braid()
    unit_of_counit = Pipe(eta, eps)
    return report(
        check_identity("antipode-antimultiplicative", Pipe(lam, mu), Pipe(mu, (lam, lam), c)),
        check_identity("antipode-anticomultiplicative", Pipe(dlt, lam), Pipe((lam, lam), c, dlt)),
        check_identity("antipode-fixes-unit", Pipe(lam, eta), eta),
        check_identity("antipode-fixes-counit", Pipe(eps, lam), eps),
        check_identity("antipode-convolution-left", Pipe(mu, (lam, ident), dlt), unit_of_counit),
        check_identity("antipode-convolution-right", Pipe(mu, (ident, lam), dlt), unit_of_counit),
    )


# ---------------------------------------------------------------------------
# predicates


def is_commutative(h: HopfStructure) -> bool:
    return maps_equal(Pipe(h.product, h.braid()), h.product) is None


def is_cocommutative(h: HopfStructure) -> bool:
    return maps_equal(Pipe(h.braid(), h.coproduct), h.coproduct) is None


def _assoc_defect(h: HopfStructure) -> Optional[tuple[int, ...]]:
    ident = h.ident()
    j = maps_equal(Pipe(h.product, (h.product, ident)), Pipe(h.product, (ident, h.product)))
    if j is None:
        return None
    return decompose_index(j, (h.dim, h.dim, h.dim))


def is_associative(h: HopfStructure) -> bool:
    return _assoc_defect(h) is None


def associativity_witness(h: HopfStructure) -> Optional[tuple[int, int, int]]:
    """Basis triple (i, j, k) with (e_i e_j) e_k != e_i (e_j e_k), if any."""
    return _assoc_defect(h)


def _coassoc_defect(h: HopfStructure) -> Optional[tuple[int, ...]]:
    ident = h.ident()
    j = maps_equal(
        Pipe((h.coproduct, ident), h.coproduct), Pipe((ident, h.coproduct), h.coproduct)
    )
    return None if j is None else (j,)


def is_coassociative(h: HopfStructure) -> bool:
    return _coassoc_defect(h) is None


def coassociativity_witness(h: HopfStructure) -> Optional[tuple[int, ...]]:
    return _coassoc_defect(h)


# ---------------------------------------------------------------------------
# convolution


def _comagma_maps(comagma) -> tuple[Optional[LinMap], LinMap]:
    if isinstance(comagma, LinMap):
        return None, comagma
    if isinstance(comagma, tuple):
        return comagma
    return getattr(comagma, "counit", None), comagma.coproduct


def _magma_maps(magma) -> tuple[Optional[LinMap], LinMap]:
    if isinstance(magma, LinMap):
        return None, magma
    if isinstance(magma, tuple):
        return magma
    return getattr(magma, "unit", None), magma.product


def convolution(f: LinMap, g: LinMap, comagma, magma) -> LinMap:
    """Convolution product mu . (f (x) g) . delta in Hom(D, A)."""
    _, dlt = _comagma_maps(comagma)
    _, mu = _magma_maps(magma)
    return Pipe(mu, (f, g), dlt).to_linmap().reshape(dom=f.dom, cod=mu.cod)


def convolution_unit(comagma, magma) -> LinMap:
    eps = _comagma_maps(comagma)[0]
    eta = _magma_maps(magma)[0]
    return compose(eta, eps)


def convolution_inverse(f: LinMap, comagma, magma) -> Optional[LinMap]:
    """Two-sided convolution inverse of f, or None when there is none.

    Solves the exact linear system f * g = unit = g * f in the entries
    of g.  The system splits into independent blocks, one per connected
    component of the coproduct's coupling graph, which keeps it fast
    even on 48-dimensional objects; the candidate is verified by direct
    convolution before being returned.
    """
    eps, dlt = _comagma_maps(comagma)
    eta, mu = _magma_maps(magma)
    if eps is None or eta is None:
        raise StructureError("convolution_inverse needs a counit and a unit")
    n_d = dlt.dom_total
    n_a = mu.cod_total
    field = f.field
    # coproduct legs per basis element of D
    legs: list[list[tuple[int, int, object]]] = []
    for j in range(n_d):
        legs.append(
            [(*decompose_index(r, (n_d, n_d)), v) for r, v in dlt.column(j)]
        )
    # connected components of the coupling graph
    parent = list(range(n_d))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    for j in range(n_d):
        for p, q, _ in legs[j]:
            union(j, p)
            union(j, q)
    comps: dict[int, list[int]] = {}
    for j in range(n_d):
        comps.setdefault(find(j), []).append(j)

    target = compose(eta, eps)
    out: dict[tuple[int, int], object] = {}
    for members in comps.values():
        var_ids = {(a, q): i for i, (q, a) in enumerate(
            (q, a) for q in members for a in range(n_a)
        )}
        eqs: list[tuple[dict[int, object], object]] = []
        for j in members:
            lhs_rows: list[dict[int, object]] = [dict() for _ in range(n_a)]
            rhs_rows: list[dict[int, object]] = [dict() for _ in range(n_a)]
            for p, q, c in legs[j]:
                for a1, v in f.column(p):
                    base = c * v
                    for a2 in range(n_a):
                        for i, m in mu.column(a1 * n_a + a2):
                            key = var_ids[(a2, q)]
                            row = lhs_rows[i]
                            row[key] = row.get(key, field.zero) + base * m
                for a2, v in f.column(q):
                    base = c * v
                    for a1 in range(n_a):
                        for i, m in mu.column(a1 * n_a + a2):
                            key = var_ids[(a1, p)]
                            row = rhs_rows[i]
                            row[key] = row.get(key, field.zero) + base * m
            for i in range(n_a):
                rhs = target.entries[i, j]
                for row in (lhs_rows[i], rhs_rows[i]):
                    row = {k: v for k, v in row.items() if v != field.zero}
                    eqs.append((row, rhs))
        sol = _solve_sparse(eqs, len(var_ids), field)
        if sol is None:
            return None
        for (a, q), i in var_ids.items():
            out[(a, q)] = sol[i]

    g = LinMap.from_terms(field, f.dom, f.cod, {(a, q): v for (a, q), v in out.items() if v != field.zero})
    unit_map = target
    if convolution(f, g, dlt, mu) != unit_map or convolution(g, f, dlt, mu) != unit_map:
        return None
    return g


def _solve_sparse(eqs, nvars: int, field) -> Optional[list]:
    """Gauss-Jordan on sparse rows; free variables pinned to zero."""
    rows = [({k: v for k, v in row.items() if v != field.zero}, rhs) for row, rhs in eqs]
    pivot_of: dict[int, int] = {}
    used: set[int] = set()
    for var in range(nvars):
        pick = None
        for idx, (row, _) in enumerate(rows):
            if idx in used or var not in row:
                continue
            if pick is None or len(rows[idx][0]) < len(rows[pick][0]):
                pick = idx
        if pick is None:
            continue
        row, rhs = rows[pick]
        inv = field.one / row[var]
        row = {k: v * inv for k, v in row.items()}
        rhs = rhs * inv
        rows[pick] = (row, rhs)
        for idx, (other, orhs) in enumerate(rows):
            if idx == pick or var not in other:
                continue
            mult = other[var]
            merged = dict(other)
            for k, v in row.items():
                nv = merged.get(k, field.zero) - mult * v
                if nv != field.zero:
                    merged[k] = nv
                else:
                    merged.pop(k, None)
            rows[idx] = (merged, orhs - mult * rhs)
        pivot_of[var] = pick
        used.add(pick)
    sol = [field.zero] * nvars
    for var, idx in pivot_of.items():
        # after full Jordan elimination a pivot row holds its pivot plus
        # free variables only, and free variables are pinned to zero
        sol[var] = rows[idx][1]
    for idx, (row, rhs) in enumerate(rows):
        if idx in used:
            continue
        acc = rhs
        for k, v in row.items():
            acc = acc - v * sol[k]
        if acc != field.zero:
            return None
    return sol


# ---------------------------------------------------------------------------
# duality and morphisms


def dualize(h: HopfStructure) -> HopfStructure:
    """Transpose every structure map; products and coproducts trade roles.

    Tensor factors are NOT reversed: (P (x) Q)* is identified with
    P* (x) Q* index by index, so dualize . dualize is the identity on
    entries.  The antipode transposes in place.  Labels gain a trailing
    star, and a label already ending in a star loses it, so the double
    dual restores the original labels as well.
    """
    out_cls = HopfCoquasigroup if isinstance(h, HopfQuasigroup) else HopfQuasigroup
    labels = (
        tuple(l[:-1] if l.endswith("*") else f"{l}*" for l in h.labels)
        if h.labels is not None
        else None
    )
    return out_cls(
        unit=transpose(h.counit),
        product=transpose(h.coproduct).reshape(dom=(h.dim, h.dim), cod=(h.dim,)),
        counit=transpose(h.unit),
        coproduct=transpose(h.product).reshape(dom=(h.dim,), cod=(h.dim, h.dim)),
        antipode=transpose(h.antipode),
        labels=labels,
    )


def as_quasigroup(h: HopfStructure) -> HopfQuasigroup:
    """Rewrap the same maps under the quasigroup flavor (no validation)."""
    return HopfQuasigroup(
        unit=h.unit,
        product=h.product,
        counit=h.counit,
        coproduct=h.coproduct,
        antipode=h.antipode,
        labels=h.labels,
    )


def as_coquasigroup(h: HopfStructure) -> HopfCoquasigroup:
    """Rewrap the same maps under the coquasigroup flavor (no validation)."""
    return HopfCoquasigroup(
        unit=h.unit,
        product=h.product,
        counit=h.counit,
        coproduct=h.coproduct,
        antipode=h.antipode,
        labels=h.labels,
    )


def is_hopf_morphism(f: LinMap, src: HopfStructure, dst: HopfStructure) -> ValidationReport:
    """Unit/product/counit/coproduct compatibility, with the antipode
    condition reported as its own entry (it is implied for genuine
    structures but checked, not assumed)."""
    if f.dom_total != src.dim or f.cod_total != dst.dim:
        raise ShapeError(
            f"morphism {f!r} does not run between dim {src.dim} and dim {dst.dim}"
        )
    return report(
        check_identity("morphism-unit", Pipe(f, src.unit), dst.unit),
        check_identity("morphism-product", Pipe(f, src.product), Pipe(dst.product, (f, f))),
        check_identity("morphism-counit", Pipe(src.counit), Pipe(dst.counit, f)),
        check_identity("morphism-coproduct", Pipe(dst.coproduct, f), Pipe((f, f), src.coproduct)),
        check_identity("morphism-antipode", Pipe(f, src.antipode), Pipe(dst.antipode, f)),
    )


def antipode_invertible(h: HopfStructure) -> bool:
    try:
        invert(h.antipode)
    except NotInvertibleError:
        return False
    return True

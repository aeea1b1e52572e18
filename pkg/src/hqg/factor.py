"""Splitting a Hopf quasigroup along two embedded substructures.

A :class:`Factorization` presents a Hopf quasigroup ``x`` together with
two embedded pieces ``a`` and ``h`` whose images multiply back onto all
of ``x``: the map sending ``a (x) h`` to the product of the two
embedded legs is a linear bijection.  :func:`check_factorization` tests
that bijectivity together with the mixed regrouping identities that let
a glued pair associate freely against any third element.  When they all
hold, :func:`extract_distributive_law` divides the two multiplication
orders against each other to produce the twist map of a distributive
law, :func:`extract_matched_pair` reads off the pair of actions that
twist encodes, and :func:`verify_factorization_theorem` confirms stage
by stage that the gluing map is an isomorphism from the wreath product
of the pieces onto ``x``.

Everything mirrors under transposition: a :class:`Cofactorization`
presents a Hopf coquasigroup with two quotient projections whose pasted
coproduct is bijective, and the mirrored checks extract a
codistributive law, a comatched pair of coactions, and an isomorphism
onto the wreath coproduct.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .exactlin import (
    Field,
    LinMap,
    Pipe,
    compose,
    invert,
    kron,
    maps_equal,
    rank,
    transpose,
)
from .hopf_core import (
    AxiomResult,
    HopfStructure,
    StructureError,
    ValidationReport,
    antipode_invertible,
    check_identity,
    dualize,
    is_hopf_morphism,
    report,
)
from .products import (
    CodistributiveLaw,
    ComatchedPair,
    DistributiveLaw,
    MatchedPair,
    _agreement,
    _require_same_field,
    double_cross_coproduct,
    double_cross_product,
    validate_codistributive_law,
    validate_distributive_law,
    wreath_coproduct,
    wreath_product,
)

__all__ = [
    "NotFactorizationError",
    "Factorization",
    "Cofactorization",
    "canonical_factorization",
    "canonical_cofactorization",
    "dual_factorization",
    "dual_cofactorization",
    "embedding_report",
    "projection_report",
    "check_factorization",
    "check_cofactorization",
    "extract_distributive_law",
    "extract_codistributive_law",
    "extract_matched_pair",
    "extract_comatched_pair",
    "induced_substructure",
    "verify_factorization_theorem",
    "verify_cofactorization_theorem",
]


class NotFactorizationError(StructureError):
    """The presented data does not split the ambient structure as claimed.

    Carries the diagnostic report (when one exists) so callers can see
    exactly which embedding axiom or regrouping identity broke.
    """

    def __init__(self, message: str, rep: ValidationReport | None = None):
        if rep is not None and not rep.ok:
            message = message + ": " + ", ".join(str(c) for c in rep.failures())
        super().__init__(message)
        self.report = rep


# ---------------------------------------------------------------------------
# factorizations of a Hopf quasigroup


@dataclass(frozen=True, eq=False)
class Factorization:
    """An ambient Hopf quasigroup ``x`` with two embedded pieces.

    ``incl_a`` and ``incl_h`` include the acted piece ``a`` and the
    acting piece ``h`` into ``x``.  The derived gluing maps multiply the
    two embedded legs in either order: :attr:`mult_ah` sends
    ``a (x) h`` to (image of ``a``) times (image of ``h``) inside ``x``,
    and :attr:`mult_ha` multiplies in the opposite order.  The piece
    dimensions must multiply to the ambient dimension; everything else
    is checked by :func:`check_factorization`.
    """

    x: HopfStructure
    a: HopfStructure
    h: HopfStructure
    incl_a: LinMap
    incl_h: LinMap

    def __post_init__(self):
        _require_same_field(self.x, self.a, self.h, self.incl_a, self.incl_h)
        if self.a.dim * self.h.dim != self.x.dim:
            raise StructureError(
                f"piece dimensions {self.a.dim} and {self.h.dim} do not "
                f"multiply to the ambient dimension {self.x.dim}"
            )
        object.__setattr__(
            self, "incl_a", self.incl_a.reshape(dom=(self.a.dim,), cod=(self.x.dim,))
        )
        object.__setattr__(
            self, "incl_h", self.incl_h.reshape(dom=(self.h.dim,), cod=(self.x.dim,))
        )

    @property
    def field(self) -> Field:
        return self.x.field

    @cached_property
    def mult_ah(self) -> LinMap:
        """Multiply an embedded ``a``-leg by an embedded ``h``-leg."""
        return (
            Pipe(self.x.product, (self.incl_a, self.incl_h))
            .to_linmap()
            .reshape(dom=(self.a.dim, self.h.dim), cod=(self.x.dim,))
        )

    @cached_property
    def mult_ha(self) -> LinMap:
        """Multiply an embedded ``h``-leg by an embedded ``a``-leg."""
        return (
            Pipe(self.x.product, (self.incl_h, self.incl_a))
            .to_linmap()
            .reshape(dom=(self.h.dim, self.a.dim), cod=(self.x.dim,))
        )


def canonical_factorization(pair: MatchedPair, force: bool = False) -> Factorization:
    """The factorization every double cross product carries by design.

    The acted piece embeds along its identity tensored with the acting
    unit, the acting piece along the acted unit tensored with its
    identity.  With ``force`` the matched-pair validation inside the
    product construction is skipped.
    """
    big = double_cross_product(pair, force=force)
    a, h = pair.a, pair.h
    incl_a = kron(a.ident(), h.unit).reshape(dom=(a.dim,), cod=(big.dim,))
    incl_h = kron(a.unit, h.ident()).reshape(dom=(h.dim,), cod=(big.dim,))
    return Factorization(x=big, a=a, h=h, incl_a=incl_a, incl_h=incl_h)


def embedding_report(f: Factorization) -> ValidationReport:
    """Morphism axioms plus injectivity for both inclusions."""
    rep_a = is_hopf_morphism(f.incl_a, f.a, f.x) + report(
        AxiomResult("injective", rank(f.incl_a) == f.a.dim)
    )
    rep_h = is_hopf_morphism(f.incl_h, f.h, f.x) + report(
        AxiomResult("injective", rank(f.incl_h) == f.h.dim)
    )
    return rep_a.prefixed("inclusion-a") + rep_h.prefixed("inclusion-h")


def check_factorization(f: Factorization) -> ValidationReport:
    """Test the regrouping identities that make ``f`` a genuine splitting.

    pre: both inclusions embed their piece — every morphism axiom holds
    and the maps are injective.  Violations raise
    :class:`NotFactorizationError` carrying the embedding report.

    post: the returned report holds, in order: invertibility of the
    forward gluing map; the two identities letting a glued ``a``-then-
    ``h`` pair associate against any element on the right and on the
    left; the antipode-twisted identities doing the same for a reverse
    glued pair; the plain reverse-glue identities (equivalent in finite
    dimension, where the antipodes can be cancelled); and two agreement
    entries recording that each twisted identity passes or fails
    together with its plain counterpart.
    """
    pre = embedding_report(f)
    if not pre.ok:
        raise NotFactorizationError("inclusions are not embeddings", pre)
    x, a, h = f.x, f.a, f.h
    ix = x.ident()
    twisted_mult = Pipe(f.mult_ha, (h.antipode, a.antipode))

    q_right = check_identity(
        "assoc-ah-x",
        Pipe(x.product, (f.mult_ah, ix)),
        Pipe(x.product, (f.incl_a, Pipe(x.product, (f.incl_h, ix)))),
    )
    q_left = check_identity(
        "assoc-x-ah",
        Pipe(x.product, (ix, f.mult_ah)),
        Pipe(x.product, (Pipe(x.product, (ix, f.incl_a)), f.incl_h)),
    )
    q_twisted_right = check_identity(
        "assoc-antipode-ha-x",
        Pipe(x.product, (twisted_mult, ix)),
        Pipe(
            x.product,
            (
                Pipe(f.incl_h, h.antipode),
                Pipe(x.product, (Pipe(f.incl_a, a.antipode), ix)),
            ),
        ),
    )
    q_twisted_left = check_identity(
        "assoc-x-antipode-ha",
        Pipe(x.product, (ix, twisted_mult)),
        Pipe(
            x.product,
            (
                Pipe(x.product, (ix, Pipe(f.incl_h, h.antipode))),
                Pipe(f.incl_a, a.antipode),
            ),
        ),
    )
    q_plain_right = check_identity(
        "assoc-ha-x-finite",
        Pipe(x.product, (f.mult_ha, ix)),
        Pipe(x.product, (f.incl_h, Pipe(x.product, (f.incl_a, ix)))),
    )
    q_plain_left = check_identity(
        "assoc-x-ha-finite",
        Pipe(x.product, (ix, f.mult_ha)),
        Pipe(x.product, (Pipe(x.product, (ix, f.incl_h)), f.incl_a)),
    )
    return report(
        AxiomResult("mult-ah-invertible", rank(f.mult_ah) == x.dim),
        q_right,
        q_left,
        q_twisted_right,
        q_twisted_left,
        q_plain_right,
        q_plain_left,
        _agreement("finite-agreement-ha-x", q_twisted_right, q_plain_right),
        _agreement("finite-agreement-x-ha", q_twisted_left, q_plain_left),
    )


def extract_distributive_law(f: Factorization) -> DistributiveLaw:
    """Divide the two gluing orders to recover the twist map.

    pre: :func:`check_factorization` passes entirely; any failure —
    including a singular forward gluing map — raises
    :class:`NotFactorizationError` carrying the report.

    post: the returned law composes the reverse gluing map with the
    inverse of the forward one, so the wreath product it defines
    multiplies exactly like ``x`` does.
    """
    rep = check_factorization(f)
    if not rep.ok:
        raise NotFactorizationError("regrouping identities fail", rep)
    twist = compose(invert(f.mult_ah), f.mult_ha).reshape(
        dom=(f.h.dim, f.a.dim), cod=(f.a.dim, f.h.dim)
    )
    return DistributiveLaw(h=f.h, a=f.a, twist=twist)


def extract_matched_pair(f: Factorization) -> MatchedPair:
    """Read the two actions off the extracted twist map.

    The action on the acted piece keeps its leg and collapses the acting
    leg with the counit; the action on the acting piece does the
    opposite.  Preconditions are those of
    :func:`extract_distributive_law`.
    """
    law = extract_distributive_law(f)
    a, h = f.a, f.h
    action_a = (
        Pipe((a.ident(), h.counit), law.twist)
        .to_linmap()
        .reshape(dom=(h.dim, a.dim), cod=(a.dim,))
    )
    action_h = (
        Pipe((a.counit, h.ident()), law.twist)
        .to_linmap()
        .reshape(dom=(h.dim, a.dim), cod=(h.dim,))
    )
    return MatchedPair(a=a, h=h, action_a=action_a, action_h=action_h)


def verify_factorization_theorem(f: Factorization) -> ValidationReport:
    """End-to-end verification, halting at the first failing stage.

    Stage ``factorization`` runs :func:`check_factorization`; stage
    ``hypotheses`` demands both piece antipodes be invertible (the
    extraction is only justified under that hypothesis, so the pipeline
    refuses to continue without it); stage ``law`` validates the
    extracted twist as a distributive law; stage ``isomorphism`` checks
    that the forward gluing map is a bijective morphism from the wreath
    product built on that twist onto the ambient structure.
    """
    rep = check_factorization(f).prefixed("factorization")
    if not rep.ok:
        return rep
    hyp = report(
        AxiomResult("antipode-a-invertible", antipode_invertible(f.a)),
        AxiomResult("antipode-h-invertible", antipode_invertible(f.h)),
    ).prefixed("hypotheses")
    rep = rep + hyp
    if not hyp.ok:
        return rep
    twist = compose(invert(f.mult_ah), f.mult_ha).reshape(
        dom=(f.h.dim, f.a.dim), cod=(f.a.dim, f.h.dim)
    )
    law = DistributiveLaw(h=f.h, a=f.a, twist=twist)
    law_rep = validate_distributive_law(law).prefixed("law")
    rep = rep + law_rep
    if not law_rep.ok:
        return rep
    wreath = wreath_product(law, force=True)
    iso = is_hopf_morphism(f.mult_ah, wreath, f.x) + report(
        AxiomResult("bijective", rank(f.mult_ah) == f.x.dim)
    )
    return rep + iso.prefixed("isomorphism")


# ---------------------------------------------------------------------------
# cofactorizations of a Hopf coquasigroup


@dataclass(frozen=True, eq=False)
class Cofactorization:
    """An ambient Hopf coquasigroup ``y`` with two quotient projections.

    ``proj_d`` and ``proj_b`` project ``y`` onto the coacted piece ``d``
    and the coacting piece ``b``.  The derived pasting maps push the
    comultiplication of ``y`` out through the two projections in either
    order: :attr:`comult_db` lands in ``d (x) b``, :attr:`comult_bd` in
    ``b (x) d``.  The piece dimensions must multiply to the ambient
    dimension; everything else is checked by
    :func:`check_cofactorization`.
    """

    y: HopfStructure
    d: HopfStructure
    b: HopfStructure
    proj_d: LinMap
    proj_b: LinMap

    def __post_init__(self):
        _require_same_field(self.y, self.d, self.b, self.proj_d, self.proj_b)
        if self.d.dim * self.b.dim != self.y.dim:
            raise StructureError(
                f"piece dimensions {self.d.dim} and {self.b.dim} do not "
                f"multiply to the ambient dimension {self.y.dim}"
            )
        object.__setattr__(
            self, "proj_d", self.proj_d.reshape(dom=(self.y.dim,), cod=(self.d.dim,))
        )
        object.__setattr__(
            self, "proj_b", self.proj_b.reshape(dom=(self.y.dim,), cod=(self.b.dim,))
        )

    @property
    def field(self) -> Field:
        return self.y.field

    @cached_property
    def comult_db(self) -> LinMap:
        """Comultiply, then project the left leg to ``d`` and the right to ``b``."""
        return (
            Pipe((self.proj_d, self.proj_b), self.y.coproduct)
            .to_linmap()
            .reshape(dom=(self.y.dim,), cod=(self.d.dim, self.b.dim))
        )

    @cached_property
    def comult_bd(self) -> LinMap:
        """Comultiply, then project the left leg to ``b`` and the right to ``d``."""
        return (
            Pipe((self.proj_b, self.proj_d), self.y.coproduct)
            .to_linmap()
            .reshape(dom=(self.y.dim,), cod=(self.b.dim, self.d.dim))
        )


def canonical_cofactorization(pair: ComatchedPair, force: bool = False) -> Cofactorization:
    """The cofactorization every double cross coproduct carries by design.

    The coacted piece is recovered by collapsing the coacting leg with
    its counit, and vice versa.
    """
    big = double_cross_coproduct(pair, force=force)
    d, b = pair.d, pair.b
    proj_d = kron(d.ident(), b.counit).reshape(dom=(big.dim,), cod=(d.dim,))
    proj_b = kron(d.counit, b.ident()).reshape(dom=(big.dim,), cod=(b.dim,))
    return Cofactorization(y=big, d=d, b=b, proj_d=proj_d, proj_b=proj_b)


def dual_factorization(f: Factorization) -> Cofactorization:
    """Transpose a factorization into a cofactorization of the dual.

    Inclusions transpose to projections, the gluing multiplications to
    the pasting comultiplications.
    """
    return Cofactorization(
        y=dualize(f.x),
        d=dualize(f.a),
        b=dualize(f.h),
        proj_d=transpose(f.incl_a),
        proj_b=transpose(f.incl_h),
    )


def dual_cofactorization(c: Cofactorization) -> Factorization:
    """Transpose a cofactorization back into a factorization of the dual."""
    return Factorization(
        x=dualize(c.y),
        a=dualize(c.d),
        h=dualize(c.b),
        incl_a=transpose(c.proj_d),
        incl_h=transpose(c.proj_b),
    )


def projection_report(c: Cofactorization) -> ValidationReport:
    """Morphism axioms plus surjectivity for both projections."""
    rep_d = is_hopf_morphism(c.proj_d, c.y, c.d) + report(
        AxiomResult("surjective", rank(c.proj_d) == c.d.dim)
    )
    rep_b = is_hopf_morphism(c.proj_b, c.y, c.b) + report(
        AxiomResult("surjective", rank(c.proj_b) == c.b.dim)
    )
    return rep_d.prefixed("projection-d") + rep_b.prefixed("projection-b")


def check_cofactorization(c: Cofactorization) -> ValidationReport:
    """Test the coregrouping identities, mirroring :func:`check_factorization`.

    pre: both projections are surjective morphisms onto their piece;
    violations raise :class:`NotFactorizationError` carrying the
    projection report.

    post: the report holds invertibility of the forward pasting map, the
    two identities letting a pasted ``d``-then-``b`` split coassociate
    with a plain comultiplication on either side, their antipode-twisted
    reverse-paste versions, the plain reverse-paste versions (finite
    dimension), and the two agreement entries.
    """
    pre = projection_report(c)
    if not pre.ok:
        raise NotFactorizationError("projections are not quotient morphisms", pre)
    y, d, b = c.y, c.d, c.b
    iy = y.ident()
    twisted_comult = Pipe((b.antipode, d.antipode), c.comult_bd)

    q_right = check_identity(
        "coassoc-y-db",
        Pipe((iy, c.comult_db), y.coproduct),
        Pipe((Pipe((iy, c.proj_d), y.coproduct), c.proj_b), y.coproduct),
    )
    q_left = check_identity(
        "coassoc-db-y",
        Pipe((c.comult_db, iy), y.coproduct),
        Pipe((c.proj_d, Pipe((c.proj_b, iy), y.coproduct)), y.coproduct),
    )
    q_twisted_right = check_identity(
        "coassoc-y-antipode-bd",
        Pipe((iy, twisted_comult), y.coproduct),
        Pipe(
            (
                Pipe((iy, Pipe(b.antipode, c.proj_b)), y.coproduct),
                Pipe(d.antipode, c.proj_d),
            ),
            y.coproduct,
        ),
    )
    q_twisted_left = check_identity(
        "coassoc-antipode-bd-y",
        Pipe((twisted_comult, iy), y.coproduct),
        Pipe(
            (
                Pipe(b.antipode, c.proj_b),
                Pipe((Pipe(d.antipode, c.proj_d), iy), y.coproduct),
            ),
            y.coproduct,
        ),
    )
    q_plain_right = check_identity(
        "coassoc-y-bd-finite",
        Pipe((iy, c.comult_bd), y.coproduct),
        Pipe((Pipe((iy, c.proj_b), y.coproduct), c.proj_d), y.coproduct),
    )
    q_plain_left = check_identity(
        "coassoc-bd-y-finite",
        Pipe((c.comult_bd, iy), y.coproduct),
        Pipe((c.proj_b, Pipe((c.proj_d, iy), y.coproduct)), y.coproduct),
    )
    return report(
        AxiomResult("comult-db-invertible", rank(c.comult_db) == y.dim),
        q_right,
        q_left,
        q_twisted_right,
        q_twisted_left,
        q_plain_right,
        q_plain_left,
        _agreement("finite-agreement-y-bd", q_twisted_right, q_plain_right),
        _agreement("finite-agreement-bd-y", q_twisted_left, q_plain_left),
    )


def extract_codistributive_law(c: Cofactorization) -> CodistributiveLaw:
    """Divide the two pasting orders to recover the twist map.

    pre/post mirror :func:`extract_distributive_law`: the returned law
    composes the reverse pasting map with the inverse of the forward
    one, so the wreath coproduct it defines comultiplies exactly like
    ``y`` does.
    """
    rep = check_cofactorization(c)
    if not rep.ok:
        raise NotFactorizationError("coregrouping identities fail", rep)
    twist = compose(c.comult_bd, invert(c.comult_db)).reshape(
        dom=(c.d.dim, c.b.dim), cod=(c.b.dim, c.d.dim)
    )
    return CodistributiveLaw(d=c.d, b=c.b, twist=twist)


def extract_comatched_pair(c: Cofactorization) -> ComatchedPair:
    """Read the two coactions off the extracted twist map.

    The coaction on the coacting piece feeds the twist the coacted unit,
    the coaction on the coacted piece feeds it the coacting unit.
    Preconditions are those of :func:`extract_codistributive_law`.
    """
    law = extract_codistributive_law(c)
    d, b = c.d, c.b
    coaction_b = (
        Pipe(law.twist, (d.unit, b.ident()))
        .to_linmap()
        .reshape(dom=(b.dim,), cod=(b.dim, d.dim))
    )
    coaction_d = (
        Pipe(law.twist, (d.ident(), b.unit))
        .to_linmap()
        .reshape(dom=(d.dim,), cod=(b.dim, d.dim))
    )
    return ComatchedPair(b=b, d=d, coaction_b=coaction_b, coaction_d=coaction_d)


def verify_cofactorization_theorem(c: Cofactorization) -> ValidationReport:
    """End-to-end verification, halting at the first failing stage.

    Stage ``cofactorization`` runs :func:`check_cofactorization`; stage
    ``hypotheses`` demands both piece antipodes be invertible; stage
    ``law`` validates the extracted twist as a codistributive law; stage
    ``isomorphism`` checks that the forward pasting map is a bijective
    morphism from the ambient structure onto the wreath coproduct built
    on that twist.
    """
    rep = check_cofactorization(c).prefixed("cofactorization")
    if not rep.ok:
        return rep
    hyp = report(
        AxiomResult("antipode-d-invertible", antipode_invertible(c.d)),
        AxiomResult("antipode-b-invertible", antipode_invertible(c.b)),
    ).prefixed("hypotheses")
    rep = rep + hyp
    if not hyp.ok:
        return rep
    twist = compose(c.comult_bd, invert(c.comult_db)).reshape(
        dom=(c.d.dim, c.b.dim), cod=(c.b.dim, c.d.dim)
    )
    law = CodistributiveLaw(d=c.d, b=c.b, twist=twist)
    law_rep = validate_codistributive_law(law).prefixed("law")
    rep = rep + law_rep
    if not law_rep.ok:
        return rep
    wreath = wreath_coproduct(law, force=True)
    iso = is_hopf_morphism(c.comult_db, c.y, wreath) + report(
        AxiomResult("bijective", rank(c.comult_db) == c.y.dim)
    )
    return rep + iso.prefixed("isomorphism")


def _left_inverse(incl: LinMap) -> LinMap:
    """A linear left inverse of an injective map, via pivot rows.

    Scans the rows of ``incl`` in order, keeping each row that enlarges
    the span of those already kept; the kept rows form an invertible
    square submatrix whose inverse, composed with the row selection,
    undoes ``incl``.  Raises :class:`NotFactorizationError` when fewer
    independent rows exist than columns, i.e. when the map is not
    injective.
    """
    field = incl.field
    n, k = incl.entries.shape
    pivots: list[int] = []
    echelon: list[tuple[int, list]] = []
    for i in range(n):
        v = list(incl.entries[i, :])
        for lead, row in echelon:
            if v[lead] != field.zero:
                scale = v[lead] / row[lead]
                v = [v[j] - scale * row[j] for j in range(k)]
        lead = next((j for j in range(k) if v[j] != field.zero), None)
        if lead is not None:
            echelon.append((lead, v))
            pivots.append(i)
            if len(pivots) == k:
                break
    if len(pivots) < k:
        raise NotFactorizationError("the inclusion is not injective")
    select = LinMap.from_terms(
        field, (n,), (k,), {(r, i): field.one for r, i in enumerate(pivots)}
    )
    return compose(invert(compose(select, incl)), select)


def induced_substructure(
    x: HopfStructure, incl: LinMap, labels: tuple[str, ...] | None = None
) -> HopfStructure:
    """Restrict a structure to the image of an injective linear map.

    ``incl`` must be injective with codomain of the ambient dimension;
    its image must contain the unit and be closed under the ambient
    product, coproduct, and antipode, which is checked by transporting
    each map through a left inverse of ``incl`` and confirming that
    re-embedding reproduces the ambient composite on the image.  Any
    violation raises :class:`NotFactorizationError` naming the map whose
    closure fails.  The result carries the same flavor (quasigroup or
    coquasigroup) as ``x``.
    """
    if incl.dom_total > x.dim:
        raise NotFactorizationError("the inclusion is not injective")
    if incl.cod_total != x.dim:
        raise StructureError(
            f"inclusion codomain has dimension {incl.cod_total}, "
            f"ambient structure has dimension {x.dim}"
        )
    _require_same_field(x, incl)
    k = incl.dom_total
    incl = incl.reshape(dom=(k,), cod=(x.dim,))
    retract = _left_inverse(incl)

    unit = compose(retract, x.unit)
    product = (
        Pipe(retract, x.product, (incl, incl))
        .to_linmap()
        .reshape(dom=(k, k), cod=(k,))
    )
    counit = compose(x.counit, incl)
    coproduct = (
        Pipe((retract, retract), x.coproduct, incl)
        .to_linmap()
        .reshape(dom=(k,), cod=(k, k))
    )
    antipode = Pipe(retract, x.antipode, incl).to_linmap()

    closures = (
        ("unit", compose(incl, unit), x.unit),
        (
            "product",
            Pipe(incl, product).to_linmap(),
            Pipe(x.product, (incl, incl)).to_linmap(),
        ),
        (
            "coproduct",
            Pipe((incl, incl), coproduct).to_linmap(),
            Pipe(x.coproduct, incl).to_linmap(),
        ),
        ("antipode", Pipe(incl, antipode), Pipe(x.antipode, incl)),
    )
    for name, embedded, ambient in closures:
        if maps_equal(embedded, ambient) is not None:
            raise NotFactorizationError(f"the image is not closed under the {name}")

    return type(x)(
        unit=unit,
        product=product,
        counit=counit,
        coproduct=coproduct,
        antipode=antipode,
        labels=labels,
    )

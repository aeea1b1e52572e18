"""Tensor-product constructions for Hopf (co)quasigroups.

This module builds new Hopf (co)quasigroups on the tensor product of two
given ones, starting from structure-mixing data, and validates that data
axiom by axiom:

* **Distributive laws** ``twist : H (x) A -> A (x) H`` that let the two
  multiplications interleave, together with the *wreath product* they
  induce on ``A (x) H``.
* **Matched pairs** of actions ``(action_a, action_h)`` and the *double cross
  product* they induce; the one-sided special case is the *cross
  product* by a cocommutative acting structure.
* **Skew pairings** ``form : A (x) H -> k`` whose convolution inverse
  exists; these induce a matched pair of actions, hence a double cross
  product.
* The formal duals of all of the above: **codistributive laws**
  ``twist : D (x) B -> B (x) D``, the *wreath coproduct*, **comatched
  pairs** of coactions, and the *double cross coproduct*.

Validators return :class:`~hqg.hopf_core.ValidationReport` objects with
one entry per axiom; entries are grouped under dotted tier prefixes such
as ``distributive/unit-a`` or ``pair/cancel-h-1``.  Construction
functions first validate their input data and refuse to assemble the
output on failure (raising :class:`LawValidationError`, which carries
the failing report) unless ``force=True`` is passed, in which case the
object is built anyway and the caller takes responsibility for checking
it.

Conventions used throughout:

* an *action* of ``H`` on ``M`` from the left is a map ``H (x) M -> M``
  and from the right ``M (x) H -> M``; a *coaction* of ``D`` on ``P``
  from the right is ``P -> P (x) D`` and from the left ``P -> D (x) P``;
* in a distributive law the acting structure ``H`` sits on the *left*
  of the domain (``twist : H (x) A -> A (x) H``) and the wreath product
  lives on ``A (x) H`` with the A-leg first;
* dualization transposes every map and swaps the roles of the two
  tensor legs, so the dual of a law of ``H`` over ``A`` is a co-law
  whose first (co-acted-on) leg is ``A*``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Union

from .exactlin import QQ, Field, LinMap, Pipe, kron, swap, transpose
from .hopf_core import (
    AxiomResult,
    Comonoid,
    HopfCoquasigroup,
    HopfQuasigroup,
    HopfStructure,
    StructureError,
    UnitalMagma,
    ValidationReport,
    antipode_invertible,
    check_identity,
    convolution,
    convolution_inverse,
    convolution_unit,
    dualize,
    is_cocommutative,
    report,
)


class LawValidationError(StructureError):
    """Raised when a construction refuses data that fails validation.

    The failing :class:`~hqg.hopf_core.ValidationReport` is available as
    ``exc.report``.
    """

    def __init__(self, message: str, report: ValidationReport):
        super().__init__(f"{message}: {', '.join(str(c) for c in report.failures())}")
        self.report = report


# ---------------------------------------------------------------------------
# small helpers
# ---------------------------------------------------------------------------


def scalar_magma(field: Field) -> UnitalMagma:
    """The one-dimensional multiplicative structure on the ground field."""
    unit = LinMap.identity(field, (1,))
    product = LinMap.from_terms(field, (1, 1), (1,), {(0, 0): field.one})
    return UnitalMagma(unit=unit, product=product)


def tensor_comonoid(x: HopfStructure, y: HopfStructure) -> Comonoid:
    """Componentwise comonoid on ``X (x) Y``.

    The counit is ``eps_X (x) eps_Y`` and the coproduct routes the middle
    legs past each other: ``(X (x) c (x) Y) o (delta_X (x) delta_Y)``.
    """
    f = x.field
    nx, ny = x.dim, y.dim
    ix, iy = x.ident(), y.ident()
    counit = kron(x.counit, y.counit).reshape(dom=(nx * ny,), cod=(1,))
    coproduct = (
        Pipe((ix, swap(f, nx, ny), iy), (x.coproduct, y.coproduct))
        .to_linmap()
        .reshape(dom=(nx * ny,), cod=(nx * ny, nx * ny))
    )
    return Comonoid(counit=counit, coproduct=coproduct)


def tensor_magma(x: HopfStructure, y: HopfStructure) -> UnitalMagma:
    """Componentwise unital magma on ``X (x) Y``."""
    f = x.field
    nx, ny = x.dim, y.dim
    ix, iy = x.ident(), y.ident()
    unit = kron(x.unit, y.unit).reshape(dom=(1,), cod=(nx * ny,))
    product = (
        Pipe((x.product, y.product), (ix, swap(f, ny, nx), iy))
        .to_linmap()
        .reshape(dom=(nx * ny, nx * ny), cod=(nx * ny,))
    )
    return UnitalMagma(unit=unit, product=product)


def _pair_labels(a: HopfStructure, h: HopfStructure) -> Optional[tuple[str, ...]]:
    """Labels for a basis of ``A (x) H``, A-leg major, or None."""
    if a.labels is None or h.labels is None:
        return None
    return tuple(f"{la}.{lh}" for la in a.labels for lh in h.labels)


def _require_same_field(*objs) -> Field:
    fields = {o.field for o in objs}
    if len(fields) != 1:
        raise StructureError(f"mixed ground fields: {fields}")
    return fields.pop()


def _agreement(axiom: str, plain: AxiomResult, simplified: AxiomResult) -> AxiomResult:
    """Record whether a check and its simplified variant agree on pass/fail."""
    agree = plain.passed == simplified.passed
    witness = None
    if not agree:
        witness = plain.witness if not plain.passed else simplified.witness
    return AxiomResult(axiom, agree, witness)


# ---------------------------------------------------------------------------
# distributive laws and wreath products
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class DistributiveLaw:
    """A candidate interchange map ``twist : H (x) A -> A (x) H``.

    ``h`` is the acting Hopf (co)quasigroup, ``a`` the one being acted
    on.  The map is stored normalized to domain ``(dim H, dim A)`` and
    codomain ``(dim A, dim H)``.  Construction checks shapes and field
    agreement only; run :func:`validate_distributive_law` to test the
    axioms.
    """

    h: HopfStructure
    a: HopfStructure
    twist: LinMap

    def __post_init__(self):
        f = _require_same_field(self.h, self.a, self.twist)
        nh, na = self.h.dim, self.a.dim
        if self.twist.dom_total != nh * na or self.twist.cod_total != na * nh:
            raise StructureError(
                f"law map must be {nh * na} -> {na * nh} dimensional, "
                f"got {self.twist.dom_total} -> {self.twist.cod_total}"
            )
        object.__setattr__(
            self, "twist", self.twist.reshape(dom=(nh, na), cod=(na, nh))
        )

    @property
    def field(self) -> Field:
        return self.h.field


def swap_law(h: HopfStructure, a: HopfStructure) -> DistributiveLaw:
    """The trivial law: plain leg exchange ``h (x) a -> a (x) h``."""
    f = _require_same_field(h, a)
    return DistributiveLaw(h=h, a=a, twist=swap(f, h.dim, a.dim))


def validate_distributive_law(law: DistributiveLaw) -> ValidationReport:
    """Check every axiom a distributive law must satisfy.

    Tiers:

    * ``distributive`` -- compatibility with the two products and units.
      The product compatibilities are stated with an antipode twist on
      both sides; when both antipodes are invertible the twist can be
      cancelled, so the report then also contains ``*-simplified``
      variants with the twist removed and ``simplified-agreement-*``
      entries recording that each plain check and its simplified form
      agree on pass/fail.
    * ``comonoidal`` -- the law is a comonoid morphism in both legs.
    * ``a-comonoidal`` -- the antipode-cancellation identities that
      substitute for associativity in the quasi setting.
    """
    h, a, twist = law.h, law.a, law.twist
    f = law.field
    nh, na = h.dim, a.dim
    ih, ia = h.ident(), a.ident()

    twist_a = (h.antipode, a.antipode, ia)
    lhs_pa = Pipe(twist, (ih, a.product), twist_a)
    rhs_pa = Pipe((a.product, ih), (ia, twist), (twist, ia), twist_a)
    twist_h = (ih, h.antipode, a.antipode)
    lhs_ph = Pipe(twist, (h.product, ia), twist_h)
    rhs_ph = Pipe((ia, h.product), (twist, ih), (ih, twist), twist_h)

    pa = check_identity("product-compat-a", lhs_pa, rhs_pa)
    ph = check_identity("product-compat-h", lhs_ph, rhs_ph)
    distributive = [
        pa,
        ph,
        check_identity("unit-a", Pipe(twist, (ih, a.unit)), Pipe((a.unit, ih))),
        check_identity("unit-h", Pipe(twist, (h.unit, ia)), Pipe((ia, h.unit))),
    ]
    if antipode_invertible(h) and antipode_invertible(a):
        pa_s = check_identity(
            "product-compat-a-simplified",
            Pipe(twist, (ih, a.product)),
            Pipe((a.product, ih), (ia, twist), (twist, ia)),
        )
        ph_s = check_identity(
            "product-compat-h-simplified",
            Pipe(twist, (h.product, ia)),
            Pipe((ia, h.product), (twist, ih), (ih, twist)),
        )
        distributive += [
            pa_s,
            ph_s,
            _agreement("simplified-agreement-a", pa, pa_s),
            _agreement("simplified-agreement-h", ph, ph_s),
        ]

    comonoidal = [
        check_identity(
            "comultiplicative",
            Pipe((ia, swap(f, na, nh), ih), (a.coproduct, h.coproduct), twist),
            Pipe((twist, twist), (ih, swap(f, nh, na), ia), (h.coproduct, a.coproduct)),
        ),
        check_identity(
            "counitary",
            Pipe((a.counit, h.counit), twist),
            Pipe((h.counit, a.counit)),
        ),
    ]

    cancel_h_rhs = Pipe((h.counit, ia, ih))
    cancel_a_rhs = Pipe((ia, ih, a.counit))
    a_comonoidal = [
        check_identity(
            "antipode-cancel-h-1",
            Pipe(
                (ia, h.product),
                (twist, h.product),
                (ih, twist, ih),
                (Pipe((h.antipode, ih), h.coproduct), ia, ih),
            ),
            cancel_h_rhs,
        ),
        check_identity(
            "antipode-cancel-h-2",
            Pipe(
                (ia, h.product),
                (twist, h.product),
                (ih, twist, ih),
                (Pipe((ih, h.antipode), h.coproduct), ia, ih),
            ),
            cancel_h_rhs,
        ),
        check_identity(
            "antipode-cancel-a-1",
            Pipe(
                (a.product, ih),
                (a.product, twist),
                (ia, twist, ia),
                (ia, ih, Pipe((a.antipode, ia), a.coproduct)),
            ),
            cancel_a_rhs,
        ),
        check_identity(
            "antipode-cancel-a-2",
            Pipe(
                (a.product, ih),
                (a.product, twist),
                (ia, twist, ia),
                (ia, ih, Pipe((ia, a.antipode), a.coproduct)),
            ),
            cancel_a_rhs,
        ),
    ]

    return (
        report(*distributive).prefixed("distributive")
        + report(*comonoidal).prefixed("comonoidal")
        + report(*a_comonoidal).prefixed("a-comonoidal")
    )


def _assemble_product(
    a: HopfStructure, h: HopfStructure, twist: LinMap
) -> HopfQuasigroup:
    """Build the Hopf quasigroup on ``A (x) H`` determined by a law map."""
    f = a.field
    na, nh = a.dim, h.dim
    n = na * nh
    ia, ih = a.ident(), h.ident()
    unit = kron(a.unit, h.unit).reshape(dom=(1,), cod=(n,))
    product = (
        Pipe((a.product, h.product), (ia, twist, ih))
        .to_linmap()
        .reshape(dom=(n, n), cod=(n,))
    )
    counit = kron(a.counit, h.counit).reshape(dom=(n,), cod=(1,))
    coproduct = (
        Pipe((ia, swap(f, na, nh), ih), (a.coproduct, h.coproduct))
        .to_linmap()
        .reshape(dom=(n,), cod=(n, n))
    )
    antipode = (
        Pipe(twist, (h.antipode, a.antipode), swap(f, na, nh))
        .to_linmap()
        .reshape(dom=(n,), cod=(n,))
    )
    return HopfQuasigroup(
        unit=unit,
        product=product,
        counit=counit,
        coproduct=coproduct,
        antipode=antipode,
        labels=_pair_labels(a, h),
    )


def wreath_product(law: DistributiveLaw, force: bool = False) -> HopfQuasigroup:
    """The Hopf quasigroup on ``A (x) H`` induced by a distributive law.

    The product multiplies componentwise after routing the inner legs
    through the law map; the coproduct, counit and unit are the
    componentwise ones; the antipode applies both antipodes after
    routing through the law map and exchanging the legs.

    Refuses (raising :class:`LawValidationError`) if the law fails
    :func:`validate_distributive_law`, unless ``force=True`` -- the
    object is then built unvalidated and the caller must check it.
    """
    if not force:
        rep = validate_distributive_law(law)
        if not rep.ok:
            raise LawValidationError("distributive law failed validation", rep)
    return _assemble_product(law.a, law.h, law.twist)


# ---------------------------------------------------------------------------
# quasimodules and modules
# ---------------------------------------------------------------------------


def validate_quasimodule(
    action: LinMap,
    h: HopfStructure,
    m: Union[None, int, UnitalMagma, Comonoid, HopfStructure] = None,
    flavor: str = "quasimodule",
    side: str = "left",
) -> ValidationReport:
    """Check the axioms of an action of ``h`` on a space.

    ``action`` is ``H (x) M -> M`` for ``side='left'`` or
    ``M (x) H -> M`` for ``side='right'``.  ``flavor`` selects the
    weakened axioms (``'quasimodule'``: the two antipode-cancellation
    identities) or the strict ones (``'module'``: associativity of the
    action).  Both flavors include the unit axiom.

    ``m`` describes extra structure on the acted-on space: pass a
    :class:`UnitalMagma` to also check the action respects unit and
    product, a :class:`Comonoid` to check counit and coproduct, a full
    :class:`HopfStructure` to check all four, or ``None``/an ``int``
    dimension for a bare space.
    """
    if flavor not in ("quasimodule", "module"):
        raise ValueError(f"unknown flavor {flavor!r}")
    if side not in ("left", "right"):
        raise ValueError(f"unknown side {side!r}")
    f = h.field
    if action.field != f:
        raise StructureError("action and acting structure have different fields")
    nh = h.dim
    nm = action.cod_total
    if action.dom_total != nh * nm:
        raise StructureError(
            f"action must be {nh * nm} -> {nm} dimensional, "
            f"got {action.dom_total} -> {action.cod_total}"
        )
    if isinstance(m, int) and m != nm:
        raise StructureError(f"acted-on dimension mismatch: {m} != {nm}")
    act = action.reshape(
        dom=(nh, nm) if side == "left" else (nm, nh), cod=(nm,)
    )
    im = LinMap.identity(f, (nm,))
    ih = h.ident()

    magma: Optional[UnitalMagma] = None
    comonoid: Optional[Comonoid] = None
    if isinstance(m, HopfStructure):
        magma, comonoid = m.magma, m.comonoid
    elif isinstance(m, UnitalMagma):
        magma = m
    elif isinstance(m, Comonoid):
        comonoid = m

    checks = []
    if side == "left":
        checks.append(
            check_identity("action-unit", Pipe(act, (h.unit, im)), im)
        )
        if flavor == "quasimodule":
            rhs = Pipe((h.counit, im))
            checks.append(
                check_identity(
                    "action-cancel-1",
                    Pipe(act, (ih, act), (Pipe((ih, h.antipode), h.coproduct), im)),
                    rhs,
                )
            )
            checks.append(
                check_identity(
                    "action-cancel-2",
                    Pipe(act, (h.antipode, act), (h.coproduct, im)),
                    rhs,
                )
            )
        else:
            checks.append(
                check_identity(
                    "action-associative",
                    Pipe(act, (ih, act)),
                    Pipe(act, (h.product, im)),
                )
            )
        if magma is not None:
            checks.append(
                check_identity(
                    "action-preserves-unit",
                    Pipe(act, (ih, magma.unit)),
                    Pipe((h.counit, magma.unit)),
                )
            )
            checks.append(
                check_identity(
                    "action-preserves-product",
                    Pipe(
                        magma.product,
                        (act, act),
                        (ih, swap(f, nh, nm), im),
                        (h.coproduct, im, im),
                    ),
                    Pipe(act, (ih, magma.product)),
                )
            )
        if comonoid is not None:
            checks.append(
                check_identity(
                    "action-preserves-counit",
                    Pipe(comonoid.counit, act),
                    Pipe((h.counit, comonoid.counit)),
                )
            )
            checks.append(
                check_identity(
                    "action-preserves-coproduct",
                    Pipe(comonoid.coproduct, act),
                    Pipe(
                        (act, act),
                        (ih, swap(f, nh, nm), im),
                        (h.coproduct, im, im),
                        (ih, comonoid.coproduct),
                    ),
                )
            )
    else:
        checks.append(
            check_identity("action-unit", Pipe(act, (im, h.unit)), im)
        )
        if flavor == "quasimodule":
            rhs = Pipe((im, h.counit))
            checks.append(
                check_identity(
                    "action-cancel-1",
                    Pipe(act, (act, ih), (im, Pipe((h.antipode, ih), h.coproduct))),
                    rhs,
                )
            )
            checks.append(
                check_identity(
                    "action-cancel-2",
                    Pipe(act, (act, h.antipode), (im, h.coproduct)),
                    rhs,
                )
            )
        else:
            checks.append(
                check_identity(
                    "action-associative",
                    Pipe(act, (act, ih)),
                    Pipe(act, (im, h.product)),
                )
            )
        if magma is not None:
            checks.append(
                check_identity(
                    "action-preserves-unit",
                    Pipe(act, (magma.unit, ih)),
                    Pipe((magma.unit, h.counit)),
                )
            )
            checks.append(
                check_identity(
                    "action-preserves-product",
                    Pipe(
                        magma.product,
                        (act, act),
                        (im, swap(f, nm, nh), ih),
                        (im, im, h.coproduct),
                    ),
                    Pipe(act, (magma.product, ih)),
                )
            )
        if comonoid is not None:
            checks.append(
                check_identity(
                    "action-preserves-counit",
                    Pipe(comonoid.counit, act),
                    Pipe((comonoid.counit, h.counit)),
                )
            )
            checks.append(
                check_identity(
                    "action-preserves-coproduct",
                    Pipe(comonoid.coproduct, act),
                    Pipe(
                        (act, act),
                        (im, swap(f, nm, nh), ih),
                        (im, im, h.coproduct),
                        (comonoid.coproduct, ih),
                    ),
                )
            )
    return report(*checks)


# ---------------------------------------------------------------------------
# matched pairs and double cross products
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class MatchedPair:
    """A pair of actions linking two Hopf (co)quasigroups.

    ``action_a : H (x) A -> A`` is a left action of ``h`` on ``a`` and
    ``action_h : H (x) A -> H`` a right action of ``a`` on ``h`` (written
    with the H-leg first).  The induced interchange map is available as
    ``.twist`` and the induced :class:`DistributiveLaw` via
    :func:`induced_law`.
    """

    a: HopfStructure
    h: HopfStructure
    action_a: LinMap
    action_h: LinMap

    def __post_init__(self):
        _require_same_field(self.a, self.h, self.action_a, self.action_h)
        nh, na = self.h.dim, self.a.dim
        for name, mp, cod in (("action_a", self.action_a, na), ("action_h", self.action_h, nh)):
            if mp.dom_total != nh * na or mp.cod_total != cod:
                raise StructureError(
                    f"{name} must be {nh * na} -> {cod} dimensional, "
                    f"got {mp.dom_total} -> {mp.cod_total}"
                )
        object.__setattr__(
            self, "action_a", self.action_a.reshape(dom=(nh, na), cod=(na,))
        )
        object.__setattr__(
            self, "action_h", self.action_h.reshape(dom=(nh, na), cod=(nh,))
        )

    @property
    def field(self) -> Field:
        return self.a.field

    @cached_property
    def twist(self) -> LinMap:
        """The interchange map ``(action_a (x) action_h)`` over the doubled legs."""
        f = self.field
        nh, na = self.h.dim, self.a.dim
        ih, ia = self.h.ident(), self.a.ident()
        return (
            Pipe(
                (self.action_a, self.action_h),
                (ih, swap(f, nh, na), ia),
                (self.h.coproduct, self.a.coproduct),
            )
            .to_linmap()
            .reshape(dom=(nh, na), cod=(na, nh))
        )


def induced_law(pair: MatchedPair) -> DistributiveLaw:
    """The distributive law whose map is the pair's interchange map."""
    return DistributiveLaw(h=pair.h, a=pair.a, twist=pair.twist)


def validate_matched_pair(pair: MatchedPair) -> ValidationReport:
    """Check every axiom a matched pair of actions must satisfy.

    Tiers:

    * ``action-a`` -- ``action_a`` is a left module action respecting the
      comonoid structure of ``a``;
    * ``action-h`` -- ``action_h`` is a right module action (of ``a`` on
      ``h``) respecting the comonoid structure of ``h``;
    * ``pair`` -- the compatibilities tying the two actions together:
      unit absorption, the flip identity for the induced interchange
      map, twisted product compatibility for each action, and the four
      antipode-cancellation identities.
    """
    a, h = pair.a, pair.h
    action_a, action_h, twist = pair.action_a, pair.action_h, pair.twist
    f = pair.field
    na, nh = a.dim, h.dim
    ia, ih = a.ident(), h.ident()

    rep_a = validate_quasimodule(
        action_a, h, m=a.comonoid, flavor="module", side="left"
    ).prefixed("action-a")
    rep_h = validate_quasimodule(
        action_h, a, m=h.comonoid, flavor="module", side="right"
    ).prefixed("action-h")

    delta_ha = Pipe((ih, swap(f, nh, na), ia), (h.coproduct, a.coproduct))
    twisted = Pipe(twist, (h.antipode, a.antipode))
    cancel_h_rhs = Pipe((h.counit, a.counit, ih))
    cancel_a_rhs = Pipe((ia, h.counit, a.counit))

    pair_checks = [
        check_identity(
            "unit-action-a",
            Pipe(action_a, (ih, a.unit)),
            Pipe((h.counit, a.unit)),
        ),
        check_identity(
            "unit-action-h",
            Pipe(action_h, (h.unit, ia)),
            Pipe((h.unit, a.counit)),
        ),
        check_identity(
            "twist-flip",
            Pipe((action_h, action_a), delta_ha),
            Pipe(swap(f, na, nh), twist),
        ),
        check_identity(
            "product-action-a",
            Pipe(action_a, (ih, a.product), (h.antipode, a.antipode, ia)),
            Pipe(a.product, (ia, action_a), (twisted, ia)),
        ),
        check_identity(
            "cancel-h-1",
            Pipe(
                h.product,
                (action_h, h.product),
                (h.antipode, twist, ih),
                (h.coproduct, ia, ih),
            ),
            cancel_h_rhs,
        ),
        check_identity(
            "cancel-h-2",
            Pipe(
                h.product,
                (action_h, h.product),
                (ih, twist, ih),
                (Pipe((ih, h.antipode), h.coproduct), ia, ih),
            ),
            cancel_h_rhs,
        ),
        check_identity(
            "product-action-h",
            Pipe(action_h, (h.product, ia), (ih, h.antipode, a.antipode)),
            Pipe(h.product, (action_h, ih), (ih, twisted)),
        ),
        check_identity(
            "cancel-a-1",
            Pipe(
                a.product,
                (a.product, action_a),
                (ia, twist, a.antipode),
                (ia, ih, a.coproduct),
            ),
            cancel_a_rhs,
        ),
        check_identity(
            "cancel-a-2",
            Pipe(
                a.product,
                (a.product, action_a),
                (ia, twist, ia),
                (ia, ih, Pipe((a.antipode, ia), a.coproduct)),
            ),
            cancel_a_rhs,
        ),
    ]
    return rep_a + rep_h + report(*pair_checks).prefixed("pair")


def double_cross_product(pair: MatchedPair, force: bool = False) -> HopfQuasigroup:
    """The Hopf quasigroup on ``A (x) H`` induced by a matched pair.

    This is the wreath product along the pair's induced interchange
    map.  Refuses (raising :class:`LawValidationError`) if the pair
    fails :func:`validate_matched_pair`, unless ``force=True``.
    """
    if not force:
        rep = validate_matched_pair(pair)
        if not rep.ok:
            raise LawValidationError("matched pair failed validation", rep)
    return _assemble_product(pair.a, pair.h, pair.twist)


def cross_product(
    a: HopfStructure, h: HopfStructure, action_a: LinMap, force: bool = False
) -> HopfQuasigroup:
    """The one-sided special case: ``h`` acts on ``a``, ``a`` acts trivially.

    Requires ``h`` to be cocommutative (the trivial second action is
    only compatible then).  ``action_a : H (x) A -> A`` must be a module
    action respecting all of the structure of ``a``; with ``force=True``
    both requirements are skipped.  The result is the double cross
    product with the trivial action ``action_h = H (x) eps_A`` on the
    second leg.
    """
    nh, na = h.dim, a.dim
    if not force:
        if not is_cocommutative(h):
            raise StructureError(
                "cross product requires a cocommutative acting structure"
            )
        rep = validate_quasimodule(action_a, h, m=a, flavor="module", side="left")
        if not rep.ok:
            raise LawValidationError("cross product action failed validation", rep)
    action_h = kron(h.ident(), a.counit).reshape(dom=(nh, na), cod=(nh,))
    pair = MatchedPair(a=a, h=h, action_a=action_a, action_h=action_h)
    return double_cross_product(pair, force=force)


# ---------------------------------------------------------------------------
# skew pairings
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class SkewPairing:
    """A convolution-invertible bilinear form ``form : A (x) H -> k``.

    If ``form_inv`` is not supplied it is computed as the convolution
    inverse of ``form`` with respect to the componentwise comonoid on
    ``A (x) H``; a :class:`~hqg.hopf_core.StructureError` is raised if
    no inverse exists.
    """

    a: HopfStructure
    h: HopfStructure
    form: LinMap
    form_inv: Optional[LinMap] = None

    def __post_init__(self):
        _require_same_field(self.a, self.h, self.form)
        na, nh = self.a.dim, self.h.dim
        if self.form.dom_total != na * nh or self.form.cod_total != 1:
            raise StructureError(
                f"pairing must be {na * nh} -> 1 dimensional, "
                f"got {self.form.dom_total} -> {self.form.cod_total}"
            )
        object.__setattr__(
            self, "form", self.form.reshape(dom=(na, nh), cod=(1,))
        )
        if self.form_inv is None:
            inv = convolution_inverse(
                self.form, tensor_comonoid(self.a, self.h), scalar_magma(self.field)
            )
            if inv is None:
                raise StructureError("pairing is not convolution-invertible")
            object.__setattr__(self, "form_inv", inv)
        else:
            _require_same_field(self.a, self.form_inv)
            if (
                self.form_inv.dom_total != na * nh
                or self.form_inv.cod_total != 1
            ):
                raise StructureError("inverse pairing has wrong shape")
            object.__setattr__(
                self, "form_inv", self.form_inv.reshape(dom=(na, nh), cod=(1,))
            )

    @property
    def field(self) -> Field:
        return self.a.field


def validate_skew_pairing(sp: SkewPairing, deep: bool = False) -> ValidationReport:
    """Check that the stored inverse really is a convolution inverse.

    With ``deep=True`` additionally derives the actions the pairing
    induces (via :func:`actions_from_skew_pairing`) and includes the
    full matched-pair report under the ``induced`` prefix -- this is
    the operative meaning of the pairing being "skew" enough: the
    convolution conjugation it defines must produce a genuine matched
    pair.
    """
    comonoid = tensor_comonoid(sp.a, sp.h)
    magma = scalar_magma(sp.field)
    unit = convolution_unit(comonoid, magma)
    checks = [
        check_identity(
            "pairing-inverse-right",
            convolution(sp.form, sp.form_inv, comonoid, magma),
            unit,
        ),
        check_identity(
            "pairing-inverse-left",
            convolution(sp.form_inv, sp.form, comonoid, magma),
            unit,
        ),
    ]
    rep = report(*checks).prefixed("pairing")
    if deep:
        pair = actions_from_skew_pairing(sp)
        rep = rep + validate_matched_pair(pair).prefixed("induced")
    return rep


def actions_from_skew_pairing(sp: SkewPairing) -> MatchedPair:
    """The matched pair of actions induced by conjugation with a pairing.

    Both actions conjugate by the pairing: evaluate ``form`` against the
    first pieces of the coproducts, keep a middle piece, and evaluate
    ``form_inv`` against the last pieces.  For ``action_a`` the middle piece
    kept is the A-leg; for ``action_h`` it is the H-leg.
    """
    a, h, form, form_inv = sp.a, sp.h, sp.form, sp.form_inv
    f = sp.field
    na, nh = a.dim, h.dim
    ia, ih = a.ident(), h.ident()
    delta_ah = Pipe((ia, swap(f, na, nh), ih), (a.coproduct, h.coproduct))

    action_a = (
        Pipe(
            (form, ia, form_inv),
            (ia, ih, a.coproduct, ih),
            delta_ah,
            swap(f, nh, na),
        )
        .to_linmap()
        .reshape(dom=(nh, na), cod=(na,))
    )
    action_h = (
        Pipe(
            (form, ih, form_inv),
            (ia, ih, swap(f, na, nh), ih),
            (ia, ih, ia, h.coproduct),
            delta_ah,
            swap(f, nh, na),
        )
        .to_linmap()
        .reshape(dom=(nh, na), cod=(nh,))
    )
    return MatchedPair(a=a, h=h, action_a=action_a, action_h=action_h)


# ---------------------------------------------------------------------------
# a four-dimensional associative example and its pairing with loop algebras
# ---------------------------------------------------------------------------


def taft_algebra(field: Field = QQ) -> HopfQuasigroup:
    """The four-dimensional Hopf algebra on basis ``1, x, y, w``.

    ``x`` is a grouplike involution, ``y`` is ``(1, x)``-primitive,
    ``w = x*y``, and the antipode exchanges ``y`` and ``w`` up to sign.
    Associative and coassociative but neither commutative nor
    cocommutative; the antipode has order four.  Not defined in
    characteristic two (the sign structure degenerates).
    """
    if field.characteristic == 2:
        raise StructureError("not defined in characteristic two")
    one, neg = field.one, -field.one
    # basis order: 1, x, y, w
    product = LinMap.from_terms(
        field,
        (4, 4),
        (4,),
        {
            (0, 0 * 4 + 0): one,  # 1*1 = 1
            (1, 0 * 4 + 1): one,  # 1*x = x
            (2, 0 * 4 + 2): one,  # 1*y = y
            (3, 0 * 4 + 3): one,  # 1*w = w
            (1, 1 * 4 + 0): one,  # x*1 = x
            (0, 1 * 4 + 1): one,  # x*x = 1
            (3, 1 * 4 + 2): one,  # x*y = w
            (2, 1 * 4 + 3): one,  # x*w = y
            (2, 2 * 4 + 0): one,  # y*1 = y
            (3, 2 * 4 + 1): neg,  # y*x = -w
            (3, 3 * 4 + 0): one,  # w*1 = w
            (2, 3 * 4 + 1): neg,  # w*x = -y
            # y*y = y*w = w*y = w*w = 0
        },
    )
    unit = LinMap.from_terms(field, (1,), (4,), {(0, 0): one})
    counit = LinMap.from_terms(field, (4,), (1,), {(0, 0): one, (0, 1): one})
    coproduct = LinMap.from_terms(
        field,
        (4,),
        (4, 4),
        {
            (0 * 4 + 0, 0): one,  # 1 -> 1 (x) 1
            (1 * 4 + 1, 1): one,  # x -> x (x) x
            (2 * 4 + 1, 2): one,  # y -> y (x) x + 1 (x) y
            (0 * 4 + 2, 2): one,
            (3 * 4 + 0, 3): one,  # w -> w (x) 1 + x (x) w
            (1 * 4 + 3, 3): one,
        },
    )
    antipode = LinMap.from_terms(
        field,
        (4,),
        (4,),
        {(0, 0): one, (1, 1): one, (3, 2): one, (2, 3): neg},
    )
    return HopfQuasigroup(
        unit=unit,
        product=product,
        counit=counit,
        coproduct=coproduct,
        antipode=antipode,
        labels=("1", "x", "y", "w"),
    )


def loop_taft_pairing(field: Field = QQ) -> SkewPairing:
    """The pairing between a smallest-nonassociative loop algebra and
    :func:`taft_algebra`.

    ``A`` is the loop algebra of the doubled copy of the six-element
    symmetric group (the smallest Moufang loop that is not a group) and
    ``H`` the four-dimensional algebra.  On basis elements the pairing
    sends ``q (x) 1`` to ``1``, ``q (x) x`` to the sign tracking whether
    ``q`` lies in the doubled half, and ``q (x) y``, ``q (x) w`` to
    ``0``.  It is its own convolution inverse.
    """
    from .loops import builtin_group, chein_double, loop_algebra

    a = loop_algebra(chein_double(builtin_group("s3")), field=field)
    h = taft_algebra(field=field)
    one = field.one
    terms = {}
    for alpha in (0, 1):
        sign = one if alpha == 0 else -one
        for i in range(6):
            q = alpha * 6 + i
            terms[(0, q * 4 + 0)] = one
            terms[(0, q * 4 + 1)] = sign
    form = LinMap.from_terms(field, (12, 4), (1,), terms)
    return SkewPairing(a=a, h=h, form=form)


# ---------------------------------------------------------------------------
# codistributive laws and wreath coproducts (the dual family)
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class CodistributiveLaw:
    """A candidate interchange map ``twist : D (x) B -> B (x) D``.

    The dual notion to :class:`DistributiveLaw`: ``b`` is the coacting
    Hopf (co)quasigroup and ``d`` the one being coacted on, and the
    wreath *coproduct* built from the law lives on ``D (x) B`` with the
    D-leg first.
    """

    d: HopfStructure
    b: HopfStructure
    twist: LinMap

    def __post_init__(self):
        _require_same_field(self.d, self.b, self.twist)
        nd, nb = self.d.dim, self.b.dim
        if self.twist.dom_total != nd * nb or self.twist.cod_total != nb * nd:
            raise StructureError(
                f"law map must be {nd * nb} -> {nb * nd} dimensional, "
                f"got {self.twist.dom_total} -> {self.twist.cod_total}"
            )
        object.__setattr__(
            self, "twist", self.twist.reshape(dom=(nd, nb), cod=(nb, nd))
        )

    @property
    def field(self) -> Field:
        return self.d.field


def swap_colaw(d: HopfStructure, b: HopfStructure) -> CodistributiveLaw:
    """The trivial co-law: plain leg exchange ``d (x) b -> b (x) d``."""
    f = _require_same_field(d, b)
    return CodistributiveLaw(d=d, b=b, twist=swap(f, d.dim, b.dim))


def validate_codistributive_law(law: CodistributiveLaw) -> ValidationReport:
    """Check every axiom a codistributive law must satisfy.

    The transpose-mirror of :func:`validate_distributive_law`: tiers
    ``codistributive`` (coproduct/counit compatibility, with simplified
    variants and agreement entries when both antipodes are invertible),
    ``monoidal`` (the law is an algebra morphism in both legs) and
    ``a-monoidal`` (the antipode-cancellation identities substituting
    for coassociativity).
    """
    d, b, twist = law.d, law.b, law.twist
    f = law.field
    nd, nb = d.dim, b.dim
    idd, ib = d.ident(), b.ident()

    twist_b = (ib, b.antipode, d.antipode)
    lhs_cb = Pipe(twist_b, (b.coproduct, idd), twist)
    rhs_cb = Pipe(twist_b, (ib, twist), (twist, ib), (idd, b.coproduct))
    twist_d = (b.antipode, d.antipode, idd)
    lhs_cd = Pipe(twist_d, (ib, d.coproduct), twist)
    rhs_cd = Pipe(twist_d, (twist, idd), (idd, twist), (d.coproduct, ib))

    cb = check_identity("coproduct-compat-b", lhs_cb, rhs_cb)
    cd = check_identity("coproduct-compat-d", lhs_cd, rhs_cd)
    codistributive = [
        cb,
        cd,
        check_identity(
            "counit-b", Pipe((b.counit, idd), twist), Pipe((idd, b.counit))
        ),
        check_identity(
            "counit-d", Pipe((ib, d.counit), twist), Pipe((d.counit, ib))
        ),
    ]
    if antipode_invertible(d) and antipode_invertible(b):
        cb_s = check_identity(
            "coproduct-compat-b-simplified",
            Pipe((b.coproduct, idd), twist),
            Pipe((ib, twist), (twist, ib), (idd, b.coproduct)),
        )
        cd_s = check_identity(
            "coproduct-compat-d-simplified",
            Pipe((ib, d.coproduct), twist),
            Pipe((twist, idd), (idd, twist), (d.coproduct, ib)),
        )
        codistributive += [
            cb_s,
            cd_s,
            _agreement("simplified-agreement-b", cb, cb_s),
            _agreement("simplified-agreement-d", cd, cd_s),
        ]

    monoidal = [
        check_identity(
            "multiplicative",
            Pipe(twist, (d.product, b.product), (idd, swap(f, nb, nd), ib)),
            Pipe((b.product, d.product), (ib, swap(f, nd, nb), idd), (twist, twist)),
        ),
        check_identity(
            "unital",
            Pipe(twist, (d.unit, b.unit)),
            Pipe((b.unit, d.unit)),
        ),
    ]

    cancel_d_rhs = Pipe((idd, ib, d.unit))
    cancel_b_rhs = Pipe((b.unit, idd, ib))
    a_monoidal = [
        check_identity(
            "antipode-cancel-d-1",
            Pipe(
                (idd, ib, Pipe(d.product, (d.antipode, idd))),
                (idd, twist, idd),
                (d.coproduct, twist),
                (d.coproduct, ib),
            ),
            cancel_d_rhs,
        ),
        check_identity(
            "antipode-cancel-d-2",
            Pipe(
                (idd, ib, Pipe(d.product, (idd, d.antipode))),
                (idd, twist, idd),
                (d.coproduct, twist),
                (d.coproduct, ib),
            ),
            cancel_d_rhs,
        ),
        check_identity(
            "antipode-cancel-b-1",
            Pipe(
                (Pipe(b.product, (b.antipode, ib)), idd, ib),
                (ib, twist, ib),
                (twist, b.coproduct),
                (idd, b.coproduct),
            ),
            cancel_b_rhs,
        ),
        check_identity(
            "antipode-cancel-b-2",
            Pipe(
                (Pipe(b.product, (ib, b.antipode)), idd, ib),
                (ib, twist, ib),
                (twist, b.coproduct),
                (idd, b.coproduct),
            ),
            cancel_b_rhs,
        ),
    ]

    return (
        report(*codistributive).prefixed("codistributive")
        + report(*monoidal).prefixed("monoidal")
        + report(*a_monoidal).prefixed("a-monoidal")
    )


def _assemble_coproduct(
    d: HopfStructure, b: HopfStructure, twist: LinMap
) -> HopfCoquasigroup:
    """Build the Hopf coquasigroup on ``D (x) B`` determined by a co-law map."""
    f = d.field
    nd, nb = d.dim, b.dim
    n = nd * nb
    idd, ib = d.ident(), b.ident()
    unit = kron(d.unit, b.unit).reshape(dom=(1,), cod=(n,))
    product = (
        Pipe((d.product, b.product), (idd, swap(f, nb, nd), ib))
        .to_linmap()
        .reshape(dom=(n, n), cod=(n,))
    )
    counit = kron(d.counit, b.counit).reshape(dom=(n,), cod=(1,))
    coproduct = (
        Pipe((idd, twist, ib), (d.coproduct, b.coproduct))
        .to_linmap()
        .reshape(dom=(n,), cod=(n, n))
    )
    antipode = (
        Pipe(swap(f, nb, nd), (b.antipode, d.antipode), twist)
        .to_linmap()
        .reshape(dom=(n,), cod=(n,))
    )
    return HopfCoquasigroup(
        unit=unit,
        product=product,
        counit=counit,
        coproduct=coproduct,
        antipode=antipode,
        labels=_pair_labels(d, b),
    )


def wreath_coproduct(law: CodistributiveLaw, force: bool = False) -> HopfCoquasigroup:
    """The Hopf coquasigroup on ``D (x) B`` induced by a codistributive law.

    The coproduct routes the inner legs through the law map before
    splitting componentwise; product, unit and counit are the
    componentwise ones; the antipode exchanges the legs, applies both
    antipodes, and routes back through the law map.

    Refuses (raising :class:`LawValidationError`) if the law fails
    :func:`validate_codistributive_law`, unless ``force=True``.
    """
    if not force:
        rep = validate_codistributive_law(law)
        if not rep.ok:
            raise LawValidationError("codistributive law failed validation", rep)
    return _assemble_coproduct(law.d, law.b, law.twist)


# ---------------------------------------------------------------------------
# quasicomodules and comodules
# ---------------------------------------------------------------------------


def validate_quasicomodule(
    coaction: LinMap,
    d: HopfStructure,
    p: Union[None, int, UnitalMagma, Comonoid, HopfStructure] = None,
    flavor: str = "quasicomodule",
    side: str = "right",
) -> ValidationReport:
    """Check the axioms of a coaction of ``d`` on a space.

    ``coaction`` is ``P -> P (x) D`` for ``side='right'`` or
    ``P -> D (x) P`` for ``side='left'``.  ``flavor`` selects the
    weakened axioms (``'quasicomodule'``: two antipode-cancellation
    identities) or the strict ones (``'comodule'``: coassociativity of
    the coaction).  Both flavors include the counit axiom.

    ``p`` describes extra structure on the coacted-on space, as in
    :func:`validate_quasimodule`.
    """
    if flavor not in ("quasicomodule", "comodule"):
        raise ValueError(f"unknown flavor {flavor!r}")
    if side not in ("left", "right"):
        raise ValueError(f"unknown side {side!r}")
    f = d.field
    if coaction.field != f:
        raise StructureError("coaction and coacting structure have different fields")
    nd = d.dim
    np_ = coaction.dom_total
    if coaction.cod_total != nd * np_:
        raise StructureError(
            f"coaction must be {np_} -> {nd * np_} dimensional, "
            f"got {coaction.dom_total} -> {coaction.cod_total}"
        )
    if isinstance(p, int) and p != np_:
        raise StructureError(f"coacted-on dimension mismatch: {p} != {np_}")
    co = coaction.reshape(
        dom=(np_,), cod=(np_, nd) if side == "right" else (nd, np_)
    )
    ip = LinMap.identity(f, (np_,))
    idd = d.ident()

    magma: Optional[UnitalMagma] = None
    comonoid: Optional[Comonoid] = None
    if isinstance(p, HopfStructure):
        magma, comonoid = p.magma, p.comonoid
    elif isinstance(p, UnitalMagma):
        magma = p
    elif isinstance(p, Comonoid):
        comonoid = p

    checks = []
    if side == "right":
        checks.append(
            check_identity("coaction-counit", Pipe((ip, d.counit), co), ip)
        )
        if flavor == "quasicomodule":
            rhs = Pipe((ip, d.unit))
            checks.append(
                check_identity(
                    "coaction-cancel-1",
                    Pipe((ip, Pipe(d.product, (d.antipode, idd))), (co, idd), co),
                    rhs,
                )
            )
            checks.append(
                check_identity(
                    "coaction-cancel-2",
                    Pipe((ip, d.product), (co, d.antipode), co),
                    rhs,
                )
            )
        else:
            checks.append(
                check_identity(
                    "coaction-coassociative",
                    Pipe((co, idd), co),
                    Pipe((ip, d.coproduct), co),
                )
            )
        if magma is not None:
            checks.append(
                check_identity(
                    "coaction-preserves-unit",
                    Pipe(co, magma.unit),
                    Pipe((magma.unit, d.unit)),
                )
            )
            checks.append(
                check_identity(
                    "coaction-preserves-product",
                    Pipe(co, magma.product),
                    Pipe(
                        (magma.product, idd),
                        (ip, ip, d.product),
                        (ip, swap(f, nd, np_), idd),
                        (co, co),
                    ),
                )
            )
        if comonoid is not None:
            checks.append(
                check_identity(
                    "coaction-preserves-counit",
                    Pipe((comonoid.counit, idd), co),
                    Pipe(d.unit, comonoid.counit),
                )
            )
            checks.append(
                check_identity(
                    "coaction-preserves-coproduct",
                    Pipe((comonoid.coproduct, idd), co),
                    Pipe(
                        (ip, ip, d.product),
                        (ip, swap(f, nd, np_), idd),
                        (co, co),
                        comonoid.coproduct,
                    ),
                )
            )
    else:
        checks.append(
            check_identity("coaction-counit", Pipe((d.counit, ip), co), ip)
        )
        if flavor == "quasicomodule":
            rhs = Pipe((d.unit, ip))
            checks.append(
                check_identity(
                    "coaction-cancel-1",
                    Pipe((Pipe(d.product, (idd, d.antipode)), ip), (idd, co), co),
                    rhs,
                )
            )
            checks.append(
                check_identity(
                    "coaction-cancel-2",
                    Pipe((d.product, ip), (d.antipode, co), co),
                    rhs,
                )
            )
        else:
            checks.append(
                check_identity(
                    "coaction-coassociative",
                    Pipe((idd, co), co),
                    Pipe((d.coproduct, ip), co),
                )
            )
        if magma is not None:
            checks.append(
                check_identity(
                    "coaction-preserves-unit",
                    Pipe(co, magma.unit),
                    Pipe((d.unit, magma.unit)),
                )
            )
            checks.append(
                check_identity(
                    "coaction-preserves-product",
                    Pipe(co, magma.product),
                    Pipe(
                        (idd, magma.product),
                        (d.product, ip, ip),
                        (idd, swap(f, np_, nd), ip),
                        (co, co),
                    ),
                )
            )
        if comonoid is not None:
            checks.append(
                check_identity(
                    "coaction-preserves-counit",
                    Pipe((idd, comonoid.counit), co),
                    Pipe(d.unit, comonoid.counit),
                )
            )
            checks.append(
                check_identity(
                    "coaction-preserves-coproduct",
                    Pipe((idd, comonoid.coproduct), co),
                    Pipe(
                        (d.product, ip, ip),
                        (idd, swap(f, np_, nd), ip),
                        (co, co),
                        comonoid.coproduct,
                    ),
                )
            )
    return report(*checks)


# ---------------------------------------------------------------------------
# comatched pairs and double cross coproducts
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class ComatchedPair:
    """A pair of coactions linking two Hopf (co)quasigroups.

    ``coaction_b : B -> B (x) D`` is a right coaction of ``d`` on ``b`` and
    ``coaction_d : D -> B (x) D`` a left coaction of ``b`` on ``d`` (written
    with the B-leg first).  The induced interchange map is available as
    ``.twist`` and the induced :class:`CodistributiveLaw` via
    :func:`induced_colaw`.
    """

    b: HopfStructure
    d: HopfStructure
    coaction_b: LinMap
    coaction_d: LinMap

    def __post_init__(self):
        _require_same_field(self.b, self.d, self.coaction_b, self.coaction_d)
        nb, nd = self.b.dim, self.d.dim
        for name, mp, dom in (("coaction_b", self.coaction_b, nb), ("coaction_d", self.coaction_d, nd)):
            if mp.dom_total != dom or mp.cod_total != nb * nd:
                raise StructureError(
                    f"{name} must be {dom} -> {nb * nd} dimensional, "
                    f"got {mp.dom_total} -> {mp.cod_total}"
                )
        object.__setattr__(
            self, "coaction_b", self.coaction_b.reshape(dom=(nb,), cod=(nb, nd))
        )
        object.__setattr__(
            self, "coaction_d", self.coaction_d.reshape(dom=(nd,), cod=(nb, nd))
        )

    @property
    def field(self) -> Field:
        return self.b.field

    @cached_property
    def twist(self) -> LinMap:
        """The interchange map pairing the two coactions multiplicatively."""
        f = self.field
        nb, nd = self.b.dim, self.d.dim
        ib, idd = self.b.ident(), self.d.ident()
        return (
            Pipe(
                (self.b.product, self.d.product),
                (ib, swap(f, nd, nb), idd),
                (self.coaction_d, self.coaction_b),
            )
            .to_linmap()
            .reshape(dom=(nd, nb), cod=(nb, nd))
        )


def induced_colaw(pair: ComatchedPair) -> CodistributiveLaw:
    """The codistributive law whose map is the pair's interchange map."""
    return CodistributiveLaw(d=pair.d, b=pair.b, twist=pair.twist)


def validate_comatched_pair(pair: ComatchedPair) -> ValidationReport:
    """Check every axiom a comatched pair of coactions must satisfy.

    The transpose-mirror of :func:`validate_matched_pair`: tiers
    ``coaction-b`` (``coaction_b`` is a right comodule coaction respecting
    the magma structure of ``b``), ``coaction-d`` (``coaction_d`` is a left
    comodule coaction respecting the magma structure of ``d``) and
    ``pair`` (the compatibilities tying the coactions together).
    """
    b, d = pair.b, pair.d
    coaction_b, coaction_d, twist = pair.coaction_b, pair.coaction_d, pair.twist
    f = pair.field
    nb, nd = b.dim, d.dim
    ib, idd = b.ident(), d.ident()

    rep_b = validate_quasicomodule(
        coaction_b, d, p=b.magma, flavor="comodule", side="right"
    ).prefixed("coaction-b")
    rep_d = validate_quasicomodule(
        coaction_d, b, p=d.magma, flavor="comodule", side="left"
    ).prefixed("coaction-d")

    twisted = Pipe((b.antipode, d.antipode), twist)
    cancel_b_rhs = Pipe((b.unit, d.unit, ib))
    cancel_d_rhs = Pipe((idd, b.unit, d.unit))

    pair_checks = [
        check_identity(
            "counit-coaction-b",
            Pipe((b.counit, idd), coaction_b),
            Pipe(d.unit, b.counit),
        ),
        check_identity(
            "counit-coaction-d",
            Pipe((ib, d.counit), coaction_d),
            Pipe(b.unit, d.counit),
        ),
        check_identity(
            "twist-flip",
            Pipe((b.product, d.product), (ib, swap(f, nd, nb), idd), (coaction_b, coaction_d)),
            Pipe(twist, swap(f, nb, nd)),
        ),
        check_identity(
            "coproduct-coaction-b",
            Pipe((ib, b.antipode, d.antipode), (b.coproduct, idd), coaction_b),
            Pipe((ib, twisted), (coaction_b, ib), b.coproduct),
        ),
        check_identity(
            "cancel-b-1",
            Pipe(
                (b.product, idd, ib),
                (b.antipode, twist, ib),
                (coaction_b, b.coproduct),
                b.coproduct,
            ),
            cancel_b_rhs,
        ),
        check_identity(
            "cancel-b-2",
            Pipe(
                (Pipe(b.product, (ib, b.antipode)), idd, ib),
                (ib, twist, ib),
                (coaction_b, b.coproduct),
                b.coproduct,
            ),
            cancel_b_rhs,
        ),
        check_identity(
            "coproduct-coaction-d",
            Pipe((b.antipode, d.antipode, idd), (ib, d.coproduct), coaction_d),
            Pipe((twisted, idd), (idd, coaction_d), d.coproduct),
        ),
        check_identity(
            "cancel-d-1",
            Pipe(
                (idd, ib, d.product),
                (idd, twist, d.antipode),
                (d.coproduct, coaction_d),
                d.coproduct,
            ),
            cancel_d_rhs,
        ),
        check_identity(
            "cancel-d-2",
            Pipe(
                (idd, ib, Pipe(d.product, (d.antipode, idd))),
                (idd, twist, idd),
                (d.coproduct, coaction_d),
                d.coproduct,
            ),
            cancel_d_rhs,
        ),
    ]
    return rep_b + rep_d + report(*pair_checks).prefixed("pair")


def double_cross_coproduct(
    pair: ComatchedPair, force: bool = False
) -> HopfCoquasigroup:
    """The Hopf coquasigroup on ``D (x) B`` induced by a comatched pair.

    This is the wreath coproduct along the pair's induced interchange
    map.  Refuses (raising :class:`LawValidationError`) if the pair
    fails :func:`validate_comatched_pair`, unless ``force=True``.
    """
    if not force:
        rep = validate_comatched_pair(pair)
        if not rep.ok:
            raise LawValidationError("comatched pair failed validation", rep)
    return _assemble_coproduct(pair.d, pair.b, pair.twist)


# ---------------------------------------------------------------------------
# duality bridges
# ---------------------------------------------------------------------------


def dual_law(law: DistributiveLaw) -> CodistributiveLaw:
    """Transpose a distributive law into a codistributive law.

    Transposing ``twist : H (x) A -> A (x) H`` gives a map
    ``A* (x) H* -> H* (x) A*``, i.e. a codistributive law whose
    coacted-on leg is ``A*`` and whose coacting leg is ``H*``.  The
    wreath coproduct of the result is the dual of the wreath product of
    the input (leg order is preserved: A-leg first in both).
    """
    return CodistributiveLaw(
        d=dualize(law.a), b=dualize(law.h), twist=transpose(law.twist)
    )


def dual_pair(pair: MatchedPair) -> ComatchedPair:
    """Transpose a matched pair of actions into a comatched pair of coactions.

    The transpose of the action of ``h`` on ``a`` is a coaction of
    ``A*`` on ``H*`` and vice versa; the induced interchange map of the
    result is exactly the transpose of the input's.
    """
    return ComatchedPair(
        b=dualize(pair.h),
        d=dualize(pair.a),
        coaction_b=transpose(pair.action_h),
        coaction_d=transpose(pair.action_a),
    )

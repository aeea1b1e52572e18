"""Named example structures with self-checking property manifests.

Each :class:`CatalogEntry` couples a builder with the list of properties
the built object is expected to satisfy; :func:`check_entry` rebuilds
the object and re-verifies every claim, so the catalog doubles as a
continuous-integration gate.  Fixed entries cover the symmetric group
on three letters, small cyclic groups, the twelve-element doubled loop,
the four-dimensional non-commutative non-cocommutative Hopf algebra and
its dual, and the forty-eight-dimensional glued structure together with
its matched pair, its canonical factorization data, and its dual.

Dynamic names extend the fixed table: ``z<n>`` builds the cyclic group
of any order, and ``loop_algebra:<name>`` builds the group-like Hopf
quasigroup spanned by any catalog loop.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Any, Callable

from .exactlin import QQ, Field, LinMap, rank
from .factor import Factorization, canonical_factorization, check_factorization
from .hopf_core import (
    AxiomResult,
    HopfStructure,
    ValidationReport,
    check_antipode_properties,
    dualize,
    is_associative,
    is_coassociative,
    is_cocommutative,
    is_commutative,
    report,
    validate,
    validate_bimonoid,
)
from .loops import (
    FiniteLoop,
    builtin_group,
    chein_double,
    loop_algebra,
    loop_associativity_witness,
    validate_group,
    validate_ip_loop,
)
from .products import (
    MatchedPair,
    actions_from_skew_pairing,
    double_cross_product,
    loop_taft_pairing,
    taft_algebra,
    validate_matched_pair,
)

__all__ = [
    "CatalogError",
    "CatalogEntry",
    "entry_for",
    "list_entries",
    "build",
    "check_entry",
]


class CatalogError(ValueError):
    """Unknown catalog name or a name that cannot be synthesized."""


@dataclass(frozen=True)
class CatalogEntry:
    """A named example: how to build it and what must hold once built."""

    name: str
    kind: str
    dimension: int
    claims: tuple[str, ...]
    description: str
    builder: Callable[[Field], Any]


def _loop_commutes(l: FiniteLoop) -> bool:
    return all(
        l.mul(i, j) == l.mul(j, i) for i in range(l.order) for j in range(l.order)
    )


def _dimension_of(obj: Any) -> int:
    if isinstance(obj, FiniteLoop):
        return obj.order
    if isinstance(obj, HopfStructure):
        return obj.dim
    if isinstance(obj, MatchedPair):
        return obj.a.dim * obj.h.dim
    if isinstance(obj, Factorization):
        return obj.x.dim
    if isinstance(obj, LinMap):
        return obj.dom_total
    raise CatalogError(f"no dimension notion for {type(obj).__name__}")


def _claim_report(obj: Any, claim: str) -> ValidationReport:
    if claim == "group":
        return validate_group(obj).prefixed(claim)
    if claim == "ip-loop":
        return validate_ip_loop(obj).prefixed(claim)
    if claim == "loop-associative":
        return report(AxiomResult(claim, loop_associativity_witness(obj) is None))
    if claim == "loop-nonassociative":
        return report(AxiomResult(claim, loop_associativity_witness(obj) is not None))
    if claim == "loop-commutative":
        return report(AxiomResult(claim, _loop_commutes(obj)))
    if claim == "loop-noncommutative":
        return report(AxiomResult(claim, not _loop_commutes(obj)))
    if claim == "validates":
        return validate(obj).prefixed(claim)
    if claim == "bimonoid":
        return validate_bimonoid(obj).prefixed(claim)
    if claim == "antipode-properties":
        return check_antipode_properties(obj).prefixed(claim)
    if claim == "commutative":
        return report(AxiomResult(claim, is_commutative(obj)))
    if claim == "not-commutative":
        return report(AxiomResult(claim, not is_commutative(obj)))
    if claim == "cocommutative":
        return report(AxiomResult(claim, is_cocommutative(obj)))
    if claim == "not-cocommutative":
        return report(AxiomResult(claim, not is_cocommutative(obj)))
    if claim == "associative":
        return report(AxiomResult(claim, is_associative(obj)))
    if claim == "not-associative":
        return report(AxiomResult(claim, not is_associative(obj)))
    if claim == "coassociative":
        return report(AxiomResult(claim, is_coassociative(obj)))
    if claim == "not-coassociative":
        return report(AxiomResult(claim, not is_coassociative(obj)))
    if claim == "matched-pair":
        return validate_matched_pair(obj).prefixed(claim)
    if claim == "factorization":
        return check_factorization(obj).prefixed(claim)
    if claim == "injective":
        return report(AxiomResult(claim, rank(obj) == obj.dom_total))
    raise CatalogError(f"unknown manifest claim {claim!r}")


def _pair(field: Field) -> MatchedPair:
    return actions_from_skew_pairing(loop_taft_pairing(field))


_GROUP_CLAIMS = ("group", "loop-associative", "loop-commutative")

_HOPF_ALGEBRA_CLAIMS = (
    "validates",
    "antipode-properties",
    "associative",
    "coassociative",
    "not-commutative",
    "not-cocommutative",
)

_ENTRIES = {
    e.name: e
    for e in (
        CatalogEntry(
            "s3",
            "group",
            6,
            ("group", "loop-associative", "loop-noncommutative"),
            "symmetric group on three letters",
            lambda field: builtin_group("s3"),
        ),
        CatalogEntry(
            "z2", "group", 2, _GROUP_CLAIMS,
            "cyclic group of order 2",
            lambda field: builtin_group("z2"),
        ),
        CatalogEntry(
            "z3", "group", 3, _GROUP_CLAIMS,
            "cyclic group of order 3",
            lambda field: builtin_group("z3"),
        ),
        CatalogEntry(
            "z4", "group", 4, _GROUP_CLAIMS,
            "cyclic group of order 4",
            lambda field: builtin_group("z4"),
        ),
        CatalogEntry(
            "m_s3_2",
            "loop",
            12,
            ("ip-loop", "loop-nonassociative", "loop-noncommutative"),
            "order-12 inverse-property loop doubling the symmetric group s3",
            lambda field: chein_double(builtin_group("s3")),
        ),
        CatalogEntry(
            "taft4",
            "hopf_quasigroup",
            4,
            _HOPF_ALGEBRA_CLAIMS,
            "4-dim non-commutative non-cocommutative Hopf algebra",
            taft_algebra,
        ),
        CatalogEntry(
            "taft4_dual",
            "hopf_coquasigroup",
            4,
            _HOPF_ALGEBRA_CLAIMS,
            "transpose dual of taft4",
            lambda field: dualize(taft_algebra(field)),
        ),
        CatalogEntry(
            "mp48",
            "matched_pair",
            48,
            ("matched-pair",),
            "matched pair of the 12-dim doubled-loop algebra acting with taft4",
            _pair,
        ),
        CatalogEntry(
            "dcp48",
            "hopf_quasigroup",
            48,
            (
                "validates",
                "antipode-properties",
                "coassociative",
                "not-associative",
                "not-commutative",
                "not-cocommutative",
            ),
            "48-dim double cross product glued from mp48",
            lambda field: double_cross_product(_pair(field), force=True),
        ),
        CatalogEntry(
            "dcp48_dual",
            "hopf_coquasigroup",
            48,
            (
                "antipode-properties",
                "associative",
                "not-coassociative",
                "not-commutative",
                "not-cocommutative",
            ),
            "transpose dual of dcp48",
            lambda field: dualize(double_cross_product(_pair(field), force=True)),
        ),
        CatalogEntry(
            "dcp48_fact",
            "factorization",
            48,
            ("factorization",),
            "dcp48 with its two canonical embedded pieces",
            lambda field: canonical_factorization(_pair(field)),
        ),
        CatalogEntry(
            "dcp48_incl_a",
            "linear_map",
            12,
            ("injective",),
            "canonical embedding of the 12-dim piece into dcp48",
            lambda field: canonical_factorization(_pair(field)).incl_a,
        ),
        CatalogEntry(
            "dcp48_incl_h",
            "linear_map",
            4,
            ("injective",),
            "canonical embedding of the 4-dim piece into dcp48",
            lambda field: canonical_factorization(_pair(field)).incl_h,
        ),
    )
}

_CYCLIC = re.compile(r"^z([1-9][0-9]*)$")
_LOOP_ALGEBRA = re.compile(r"^loop_algebra:([a-z0-9_:]+)$")


def entry_for(name: str) -> CatalogEntry:
    """Resolve a fixed or dynamic catalog name to its entry."""
    if name in _ENTRIES:
        return _ENTRIES[name]
    m = _CYCLIC.match(name)
    if m:
        n = int(m.group(1))
        return CatalogEntry(
            name, "group", n, _GROUP_CLAIMS,
            f"cyclic group of order {n}",
            lambda field: builtin_group(name),
        )
    m = _LOOP_ALGEBRA.match(name)
    if m:
        inner = entry_for(m.group(1))
        if inner.kind not in ("loop", "group"):
            raise CatalogError(f"{inner.name!r} is not a loop, cannot span an algebra")
        return CatalogEntry(
            name,
            "hopf_quasigroup",
            inner.dimension,
            ("validates", "cocommutative"),
            f"group-like Hopf quasigroup spanned by {inner.name}",
            lambda field: loop_algebra(inner.builder(field), field),
        )
    raise CatalogError(
        f"unknown catalog name {name!r}; "
        f"known names: {', '.join(sorted(_ENTRIES))}, z<n>, loop_algebra:<loop>"
    )


def list_entries() -> tuple[CatalogEntry, ...]:
    return tuple(_ENTRIES.values())


def build(name: str, field: Field = QQ) -> Any:
    """Construct the named example over the given scalar field.

    Plain loop and group entries carry no scalars and ignore the field.
    """
    return entry_for(name).builder(field)


def check_entry(name: str, field: Field = QQ) -> ValidationReport:
    """Rebuild the named example and re-verify every manifest claim."""
    entry = entry_for(name)
    obj = entry.builder(field)
    rep = report(AxiomResult("dimension", _dimension_of(obj) == entry.dimension))
    for claim in entry.claims:
        rep = rep + _claim_report(obj, claim)
    return rep.prefixed(entry.name)

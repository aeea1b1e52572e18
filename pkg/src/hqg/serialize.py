"""Exact JSON serialization for every structure the package builds.

Documents are plain JSON with three mandatory header fields: ``schema``
(the format version), ``convention`` (the flattening rule used for all
matrices: row-major, leftmost tensor factor most significant), and
``kind`` (which structure the document describes).  Rational entries are
written as exact fraction strings so no precision is ever lost;
prime-field entries are written as integer residues with the modulus
recorded once in the ``field`` header.  Compound structures (laws,
matched pairs, factorizations) embed their component structures as full
sub-documents, so every file is self-contained.

Parsing and emitting are exact inverses on every supported object.
"""

from __future__ import annotations

import json
from typing import Any

import numpy as np

from .exactlin import GF, QQ, Field, LinMap, PrimeField, RationalField
from .factor import Cofactorization, Factorization
from .hopf_core import HopfCoquasigroup, HopfQuasigroup, HopfStructure
from .loops import FiniteGroup, FiniteLoop
from .products import CodistributiveLaw, ComatchedPair, DistributiveLaw, MatchedPair

SCHEMA = "hqg/v1"
CONVENTION = "row-major-left-major-v1"

MAP_NAMES = ("unit", "product", "counit", "coproduct", "antipode")

__all__ = [
    "SCHEMA",
    "CONVENTION",
    "SerializationError",
    "field_to_json",
    "field_from_json",
    "linmap_to_json",
    "linmap_from_json",
    "to_document",
    "from_document",
    "dumps",
    "loads",
    "save",
    "load",
]


class SerializationError(ValueError):
    """A document cannot be parsed or an object cannot be written."""


def field_to_json(field: Field) -> dict:
    return field.to_json()


def field_from_json(obj: Any) -> Field:
    if not isinstance(obj, dict):
        raise SerializationError(f"field descriptor must be an object, got {obj!r}")
    kind = obj.get("kind")
    if kind == "rational":
        return QQ
    if kind == "prime":
        try:
            return GF(int(obj["p"]))
        except (KeyError, ValueError) as exc:
            raise SerializationError(f"bad prime field descriptor {obj!r}") from exc
    raise SerializationError(f"unknown field kind {kind!r}")


def _scalar_to_json(field: Field, x) -> Any:
    if isinstance(field, RationalField):
        return field.format(x)
    return x.v


def linmap_to_json(m: LinMap) -> dict:
    rows, cols = m.entries.shape
    return {
        "dom": list(m.dom),
        "cod": list(m.cod),
        "entries": [
            [_scalar_to_json(m.field, m.entries[i, j]) for j in range(cols)]
            for i in range(rows)
        ],
    }


def linmap_from_json(field: Field, obj: Any) -> LinMap:
    if not isinstance(obj, dict):
        raise SerializationError(f"linear map must be an object, got {obj!r}")
    try:
        dom = tuple(int(d) for d in obj["dom"])
        cod = tuple(int(d) for d in obj["cod"])
        rows = obj["entries"]
        ent = np.empty((len(rows), len(rows[0])), dtype=object)
        for i, row in enumerate(rows):
            for j, v in enumerate(row):
                ent[i, j] = field.element(v)
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise SerializationError(f"bad linear map document: {exc}") from exc
    return LinMap(field, dom, cod, ent)


def _hopf_to_json(h: HopfStructure) -> dict:
    if isinstance(h, HopfQuasigroup):
        kind = "hopf_quasigroup"
    elif isinstance(h, HopfCoquasigroup):
        kind = "hopf_coquasigroup"
    else:
        raise SerializationError(
            "structure must declare a quasigroup or coquasigroup flavor to serialize"
        )
    doc = {
        "kind": kind,
        "field": field_to_json(h.field),
        "dim": h.dim,
        "maps": {name: linmap_to_json(getattr(h, name)) for name in MAP_NAMES},
    }
    if h.labels is not None:
        doc["labels"] = list(h.labels)
    return doc


def _hopf_from_json(doc: dict) -> HopfStructure:
    field = field_from_json(doc.get("field"))
    cls = HopfQuasigroup if doc["kind"] == "hopf_quasigroup" else HopfCoquasigroup
    try:
        maps = {name: linmap_from_json(field, doc["maps"][name]) for name in MAP_NAMES}
    except KeyError as exc:
        raise SerializationError(f"missing structure map: {exc}") from exc
    labels = doc.get("labels")
    return cls(labels=tuple(labels) if labels is not None else None, **maps)


def _loop_to_json(l: FiniteLoop) -> dict:
    return {
        "kind": "group" if isinstance(l, FiniteGroup) else "loop",
        "order": l.order,
        "identity": l.identity,
        "table": [list(r) for r in l.table],
        "inverse": list(l.inverse),
        "labels": list(l.labels),
    }


def _loop_from_json(doc: dict) -> FiniteLoop:
    cls = FiniteGroup if doc["kind"] == "group" else FiniteLoop
    try:
        return cls(
            order=int(doc["order"]),
            table=tuple(tuple(int(v) for v in row) for row in doc["table"]),
            identity=int(doc["identity"]),
            inverse=tuple(int(v) for v in doc["inverse"]),
            labels=tuple(str(s) for s in doc["labels"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise SerializationError(f"bad loop document: {exc}") from exc


def to_document(obj: Any) -> dict:
    """Emit any supported structure as a self-contained JSON document."""
    doc: dict
    if isinstance(obj, FiniteLoop):
        doc = _loop_to_json(obj)
    elif isinstance(obj, HopfStructure):
        doc = _hopf_to_json(obj)
    elif isinstance(obj, DistributiveLaw):
        doc = {
            "kind": "distributive_law",
            "field": field_to_json(obj.field),
            "h": to_document(obj.h),
            "a": to_document(obj.a),
            "twist": linmap_to_json(obj.twist),
        }
    elif isinstance(obj, MatchedPair):
        doc = {
            "kind": "matched_pair",
            "field": field_to_json(obj.a.field),
            "a": to_document(obj.a),
            "h": to_document(obj.h),
            "action_a": linmap_to_json(obj.action_a),
            "action_h": linmap_to_json(obj.action_h),
        }
    elif isinstance(obj, Factorization):
        doc = {
            "kind": "factorization",
            "field": field_to_json(obj.field),
            "x": to_document(obj.x),
            "a": to_document(obj.a),
            "h": to_document(obj.h),
            "incl_a": linmap_to_json(obj.incl_a),
            "incl_h": linmap_to_json(obj.incl_h),
        }
    elif isinstance(obj, LinMap):
        doc = {"kind": "linear_map", "field": field_to_json(obj.field)}
        doc.update(linmap_to_json(obj))
    elif isinstance(obj, (CodistributiveLaw, ComatchedPair, Cofactorization)):
        raise SerializationError(
            "dual-side compounds are rebuilt from their primal files; "
            "serialize the primal object and dualize after loading"
        )
    else:
        raise SerializationError(f"cannot serialize {type(obj).__name__}")
    return {"schema": SCHEMA, "convention": CONVENTION, **doc}


def from_document(doc: Any) -> Any:
    """Parse a document back into the structure it describes."""
    if not isinstance(doc, dict):
        raise SerializationError("document must be a JSON object")
    if doc.get("schema") != SCHEMA:
        raise SerializationError(f"unsupported schema {doc.get('schema')!r}")
    if doc.get("convention") != CONVENTION:
        raise SerializationError(
            f"unsupported flattening convention {doc.get('convention')!r}"
        )
    kind = doc.get("kind")
    try:
        if kind in ("loop", "group"):
            return _loop_from_json(doc)
        if kind in ("hopf_quasigroup", "hopf_coquasigroup"):
            return _hopf_from_json(doc)
        if kind == "distributive_law":
            field = field_from_json(doc["field"])
            return DistributiveLaw(
                h=from_document(doc["h"]),
                a=from_document(doc["a"]),
                twist=linmap_from_json(field, doc["twist"]),
            )
        if kind == "matched_pair":
            field = field_from_json(doc["field"])
            return MatchedPair(
                a=from_document(doc["a"]),
                h=from_document(doc["h"]),
                action_a=linmap_from_json(field, doc["action_a"]),
                action_h=linmap_from_json(field, doc["action_h"]),
            )
        if kind == "factorization":
            field = field_from_json(doc["field"])
            return Factorization(
                x=from_document(doc["x"]),
                a=from_document(doc["a"]),
                h=from_document(doc["h"]),
                incl_a=linmap_from_json(field, doc["incl_a"]),
                incl_h=linmap_from_json(field, doc["incl_h"]),
            )
        if kind == "linear_map":
            field = field_from_json(doc["field"])
            return linmap_from_json(field, doc)
    except KeyError as exc:
        raise SerializationError(f"document is missing field {exc}") from exc
    raise SerializationError(f"unknown document kind {kind!r}")


def dumps(obj: Any) -> str:
    return json.dumps(to_document(obj), indent=2) + "\n"


def loads(text: str) -> Any:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SerializationError(f"invalid JSON: {exc}") from exc
    return from_document(doc)


def save(obj: Any, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(obj))


def load(path) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return loads(fh.read())
    except OSError as exc:
        raise SerializationError(f"cannot read {path}: {exc}") from exc

"""The named-example catalog and its self-checking manifests."""

import pytest

from hqg.catalog import (
    CatalogError,
    _claim_report,
    build,
    check_entry,
    entry_for,
    list_entries,
)
from hqg.exactlin import GF
from hqg.serialize import to_document

FIXED = [e.name for e in list_entries()]


@pytest.mark.parametrize("name", FIXED)
def test_every_manifest_claim_passes_when_rebuilt(name):
    rep = check_entry(name)
    assert rep.ok, [str(c) for c in rep.failures()]
    assert rep[f"{name}/dimension"].passed


@pytest.mark.parametrize("name", FIXED)
def test_entry_kind_matches_the_emitted_document(name):
    assert to_document(build(name))["kind"] == entry_for(name).kind


def test_dynamic_cyclic_entries():
    entry = entry_for("z9")
    assert entry.kind == "group" and entry.dimension == 9
    assert check_entry("z9").ok
    assert build("z9").order == 9


def test_dynamic_loop_algebra_entries():
    entry = entry_for("loop_algebra:m_s3_2")
    assert entry.kind == "hopf_quasigroup" and entry.dimension == 12
    assert check_entry("loop_algebra:z4").ok


@pytest.mark.parametrize(
    "name", ["z0", "z-3", "nothing", "loop_algebra:taft4", "loop_algebra:absent"]
)
def test_unknown_names_raise(name):
    with pytest.raises(CatalogError):
        entry_for(name)


def test_unknown_claim_raises():
    with pytest.raises(CatalogError, match="unknown manifest claim"):
        _claim_report(build("taft4"), "sparkly")


def test_field_parameter_reaches_the_builders():
    assert build("taft4", GF(7)).field == GF(7)
    assert build("mp48", GF(5)).a.field == GF(5)
    assert build("loop_algebra:z3", GF(11)).field == GF(11)
    # plain loops carry no scalars and ignore the field
    assert build("s3", GF(7)).order == 6

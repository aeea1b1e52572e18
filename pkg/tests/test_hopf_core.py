"""Tests for structure containers, axiom suites, convolution, and duals."""

import pytest

from hqg.exactlin import GF, QQ, LinMap, ShapeError, compose, maps_equal
from hqg.hopf_core import (
    AxiomResult,
    Comonoid,
    HopfCoquasigroup,
    HopfQuasigroup,
    StructureError,
    UnitalMagma,
    ValidationReport,
    antipode_invertible,
    associativity_witness,
    check_antipode_properties,
    check_identity,
    coassociativity_witness,
    convolution,
    convolution_inverse,
    convolution_unit,
    dualize,
    is_associative,
    is_coassociative,
    is_cocommutative,
    is_commutative,
    is_hopf_morphism,
    report,
    validate,
    validate_comonoid,
    validate_hopf_coquasigroup,
    validate_hopf_quasigroup,
    validate_unital_magma,
)
from hqg.loops import builtin_group, chein_double, loop_algebra

QUASIGROUP_AXIOMS = (
    "unit-left",
    "unit-right",
    "counit-left",
    "counit-right",
    "coassociative",
    "counit-of-unit",
    "counit-multiplicative",
    "unit-comultiplicative",
    "coproduct-multiplicative",
    "antipode-left-1",
    "antipode-left-2",
    "antipode-right-1",
    "antipode-right-2",
)

COQUASIGROUP_AXIOMS = (
    "unit-left",
    "unit-right",
    "counit-left",
    "counit-right",
    "associative",
    "counit-of-unit",
    "counit-multiplicative",
    "unit-comultiplicative",
    "coproduct-multiplicative",
    "antipode-coleft-1",
    "antipode-coleft-2",
    "antipode-coright-1",
    "antipode-coright-2",
)


def trivial_quasigroup(field=QQ):
    one = field.one
    m = lambda dom, cod: LinMap.from_terms(field, dom, cod, {(0, 0): one})
    return HopfQuasigroup(m((1,), (1,)), m((1, 1), (1,)), m((1,), (1,)), m((1,), (1, 1)), m((1,), (1,)))


def s3_algebra(field=QQ):
    return loop_algebra(builtin_group("s3"), field)


def doubled_algebra(field=QQ):
    return loop_algebra(chein_double(builtin_group("s3")), field)


def with_antipode(h, antipode):
    return type(h)(h.unit, h.product, h.counit, h.coproduct, antipode, h.labels)


# ---------------------------------------------------------------------------
# report machinery


def test_axiom_result_str():
    assert "ok" in str(AxiomResult("unit-left", True))
    failed = str(AxiomResult("unit-left", False, (1, 2)))
    assert "FAIL" in failed and "(1, 2)" in failed


def test_report_lookup_and_merge():
    a = report(AxiomResult("x", True), [AxiomResult("y", False, (0,))])
    b = report(AxiomResult("z", True))
    merged = a + b
    assert [c.axiom for c in merged.checks] == ["x", "y", "z"]
    assert not merged.ok
    assert [c.axiom for c in merged.failures()] == ["y"]
    assert merged["y"].witness == (0,)
    with pytest.raises(KeyError):
        merged["missing"]
    pre = a.prefixed("left")
    assert [c.axiom for c in pre.checks] == ["left/x", "left/y"]
    data = merged.to_json()
    assert data["ok"] is False
    assert data["checks"][1] == {"axiom": "y", "passed": False, "witness": [0]}


def test_check_identity_witness_is_decomposed():
    f = LinMap.identity(QQ, (2, 3))
    g = LinMap.from_terms(
        QQ, (2, 3), (2, 3), {(i, i): QQ.one for i in range(6) if i != 4}
    )
    res = check_identity("probe", f, g)
    assert not res.passed
    assert res.witness == (1, 1)  # flat index 4 over factor dims (2, 3)


# ---------------------------------------------------------------------------
# containers


def test_structure_shape_validation():
    h = s3_algebra()
    with pytest.raises(StructureError, match="antipode"):
        with_antipode(h, LinMap.identity(QQ, (5,)))
    with pytest.raises(StructureError, match="labels"):
        h.relabel(("a", "b"))
    with pytest.raises(StructureError, match="different fields"):
        HopfQuasigroup(
            h.unit, h.product, h.counit, h.coproduct, LinMap.identity(GF(3), (6,))
        )


def test_structure_accessors_and_equality():
    h = s3_algebra()
    assert h.dim == 6
    assert h.field == QQ
    assert len(h.maps()) == 5
    assert h.magma.dim == 6 and h.comonoid.dim == 6
    relabeled = h.relabel([f"g{i}" for i in range(6)])
    assert relabeled == h  # equality compares structure maps, not labels
    assert relabeled.labels == ("g0", "g1", "g2", "g3", "g4", "g5")
    assert h != dualize(h)  # different kind
    assert "dim=6" in repr(h)


def test_magma_comonoid_standalone_validation():
    h = s3_algebra()
    assert validate_unital_magma(h.magma).ok
    assert validate_comonoid(h.comonoid).ok
    # wrong unit: pick a non-identity group element
    bad_unit = LinMap.from_terms(QQ, (1,), (6,), {(1, 0): QQ.one})
    rep = validate_unital_magma(UnitalMagma(bad_unit, h.product))
    assert not rep["unit-left"].passed and not rep["unit-right"].passed
    # counit that drops a basis element breaks both counit identities
    bad_counit = LinMap.from_terms(QQ, (6,), (1,), {(0, i): QQ.one for i in range(5)})
    rep = validate_comonoid(Comonoid(bad_counit, h.coproduct))
    assert not rep["counit-left"].passed
    assert rep["counit-left"].witness == (5,)
    assert rep["coassociative"].passed


# ---------------------------------------------------------------------------
# axiom suites on genuine objects


def test_trivial_object_validates():
    t = trivial_quasigroup()
    rep = validate(t)
    assert rep.ok
    assert tuple(c.axiom for c in rep.checks) == QUASIGROUP_AXIOMS


def test_group_algebra_is_hopf_quasigroup():
    rep = validate_hopf_quasigroup(s3_algebra())
    assert rep.ok
    assert tuple(c.axiom for c in rep.checks) == QUASIGROUP_AXIOMS


def test_doubled_loop_algebra_validates_but_is_not_associative():
    h = doubled_algebra()
    assert validate(h).ok
    assert not is_associative(h)
    w = associativity_witness(h)
    assert w is not None and len(w) == 3
    assert is_cocommutative(h) and not is_commutative(h)
    assert is_coassociative(h)


def test_validation_over_prime_field():
    assert validate(doubled_algebra(GF(7))).ok


def test_antipode_properties_hold_for_loop_algebras():
    for h in (s3_algebra(), doubled_algebra()):
        rep = check_antipode_properties(h)
        assert rep.ok, str(rep)


def test_perturbed_antipode_fails_exactly_the_cancellation_laws():
    h = s3_algebra()
    # redirect the antipode on basis element 1 (a transposition) to element 2
    lam = {(builtin_group("s3").inv(i), i): QQ.one for i in range(6) if i != 1}
    lam[2, 1] = QQ.one
    rep = validate(with_antipode(h, LinMap.from_terms(QQ, (6,), (6,), lam)))
    assert {c.axiom for c in rep.failures()} == {
        "antipode-left-1",
        "antipode-left-2",
        "antipode-right-1",
        "antipode-right-2",
    }
    # left laws first hit the perturbed element in the left slot, right laws
    # in the right slot
    assert rep["antipode-left-1"].witness == (1, 0)
    assert rep["antipode-right-1"].witness == (0, 1)


def test_validate_dispatch_rejects_base_class():
    from hqg.hopf_core import HopfStructure

    h = s3_algebra()
    with pytest.raises(StructureError):
        validate(HopfStructure(h.unit, h.product, h.counit, h.coproduct, h.antipode))


# ---------------------------------------------------------------------------
# duals


def test_dualize_flips_kind_and_is_involutive():
    h = doubled_algebra()
    d = dualize(h)
    assert isinstance(d, HopfCoquasigroup)
    assert d.labels == tuple(f"{l}*" for l in h.labels)
    assert validate_hopf_coquasigroup(d).ok
    assert dualize(d) == h
    assert dualize(d).labels == h.labels


def test_dual_of_nonassociative_algebra_is_noncoassociative():
    d = dualize(doubled_algebra())
    assert is_associative(d) and is_commutative(d)
    assert not is_coassociative(d)
    assert coassociativity_witness(d) is not None
    assert check_antipode_properties(d).ok


# ---------------------------------------------------------------------------
# convolution


def test_convolution_squaring_on_cyclic_group():
    h = loop_algebra(builtin_group("z3"))
    sq = convolution(h.ident(), h.ident(), h.comonoid, h.magma)
    expect = LinMap.from_terms(QQ, (3,), (3,), {((2 * i) % 3, i): QQ.one for i in range(3)})
    assert sq == expect


def test_convolution_antipode_identities():
    h = doubled_algebra()
    cu = convolution_unit(h.comonoid, h.magma)
    assert convolution(h.antipode, h.ident(), h.comonoid, h.magma) == cu
    assert convolution(h.ident(), h.antipode, h.comonoid, h.magma) == cu
    assert convolution(cu, h.ident(), h.comonoid, h.magma) == h.ident()


def test_convolution_inverse_recovers_antipode():
    for h in (s3_algebra(), doubled_algebra(), doubled_algebra(GF(5))):
        assert convolution_inverse(h.ident(), h.comonoid, h.magma) == h.antipode
        assert convolution_inverse(h.antipode, h.comonoid, h.magma) == h.ident()


def test_convolution_inverse_returns_none_when_absent():
    h = s3_algebra()
    zero = LinMap.zero(QQ, (6,), (6,))
    assert convolution_inverse(zero, h.comonoid, h.magma) is None


# ---------------------------------------------------------------------------
# morphisms


def embed_z3_in_s3(image_of_generator: int):
    """Linear map sending basis k of the 3-cycle group to that power of a
    chosen permutation."""
    g = builtin_group("s3")
    entries = {}
    x = g.identity
    for k in range(3):
        entries[(x, k)] = QQ.one
        x = g.mul(x, image_of_generator)
    return LinMap.from_terms(QQ, (3,), (6,), entries)


def test_subgroup_embedding_is_a_morphism():
    z3 = loop_algebra(builtin_group("z3"))
    s3 = s3_algebra()
    f = embed_z3_in_s3(4)  # a 3-cycle generates a copy of the cyclic group
    rep = is_hopf_morphism(f, z3, s3)
    assert rep.ok
    assert tuple(c.axiom for c in rep.checks) == (
        "morphism-unit",
        "morphism-product",
        "morphism-counit",
        "morphism-coproduct",
        "morphism-antipode",
    )


def test_wrong_order_embedding_fails_product_and_antipode():
    z3 = loop_algebra(builtin_group("z3"))
    s3 = s3_algebra()
    f = embed_z3_in_s3(1)  # a transposition has order two, not three
    rep = is_hopf_morphism(f, z3, s3)
    assert {c.axiom for c in rep.failures()} == {"morphism-product", "morphism-antipode"}


def test_counit_is_a_morphism_to_the_trivial_object():
    h = s3_algebra()
    rep = is_hopf_morphism(h.counit, h, trivial_quasigroup())
    assert rep.ok


def test_morphism_shape_mismatch():
    h = s3_algebra()
    with pytest.raises(ShapeError):
        is_hopf_morphism(LinMap.identity(QQ, (4,)), h, h)


def test_antipode_invertible():
    h = s3_algebra()
    assert antipode_invertible(h)
    assert not antipode_invertible(with_antipode(h, LinMap.zero(QQ, (6,), (6,))))

"""End-to-end acceptance gate for the worked 48-dimensional example family.

Each test covers one acceptance criterion and prints a single summary line
(PASS or FAIL plus wall time) straight to the terminal, so the whole gate
can be read off a plain ``pytest tests/test_acceptance.py`` run.

Expected matrices are rebuilt here from the published closed-form values
(loop doubling rule, four-dimensional algebra tables, pairing action
formulas, interchange formulas) rather than read back from the library, so
every comparison is against an independent oracle.  The golden files under
``tests/golden`` come from ``tools/make_goldens.py``, which shares no
algebra code with the package.
"""

import gzip
import json
import os
import time
from contextlib import contextmanager

import pytest

from hqg import (
    QQ,
    DistributiveLaw,
    Factorization,
    HopfQuasigroup,
    HopfStructure,
    LinMap,
    MatchedPair,
    NotFactorizationError,
    actions_from_skew_pairing,
    as_coquasigroup,
    build,
    builtin_group,
    canonical_factorization,
    chein_double,
    check_antipode_properties,
    check_cofactorization,
    check_factorization,
    compose,
    convolution,
    convolution_inverse,
    convolution_unit,
    double_cross_product,
    dual_cofactorization,
    dual_factorization,
    dualize,
    extract_distributive_law,
    extract_matched_pair,
    induced_law,
    is_cocommutative,
    is_commutative,
    list_entries,
    loop_algebra,
    loop_associativity_witness,
    loop_taft_pairing,
    maps_equal,
    scalar_magma,
    taft_algebra,
    tensor_comonoid,
    transpose,
    validate_bimonoid,
    validate_distributive_law,
    validate_hopf_coquasigroup,
    validate_hopf_quasigroup,
    validate_ip_loop,
    validate_matched_pair,
    verify_cofactorization_theorem,
    verify_factorization_theorem,
)

GOLDEN_DIR = os.path.join(os.path.dirname(__file__), "golden")

LOOP_DIM = 12
PIECE_DIM = 4


@contextmanager
def criterion(capsys, number, name):
    """Time one criterion and print its verdict line outside capture."""
    start = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        verdict = "PASS" if ok else "FAIL"
        with capsys.disabled():
            print(f"[acceptance] {number}/10 {name}: {verdict} ({elapsed:.2f}s)")


def same(lhs, rhs):
    assert maps_equal(lhs, rhs) is None


def failing(rep):
    return {(c.axiom, c.witness) for c in rep.failures()}


def flip_column(m, col):
    """Negate one input column of a map, leaving the original untouched."""
    entries = m.entries.copy()
    for i in range(entries.shape[0]):
        entries[i, col] = -entries[i, col]
    return LinMap(m.field, m.dom, m.cod, entries)


# ---------------------------------------------------------------------------
# shared expensive objects


@pytest.fixture(scope="module")
def pair():
    return actions_from_skew_pairing(loop_taft_pairing())


@pytest.fixture(scope="module")
def dcp(pair):
    return double_cross_product(pair, force=True)


@pytest.fixture(scope="module")
def fact(pair):
    return canonical_factorization(pair, force=True)


# ---------------------------------------------------------------------------
# independent expected matrices
#
# Loop basis: indices 0..5 are the six permutations, 6..11 their flagged
# doubles, so index // 6 is the doubling flag.  Piece basis: 1, x, y, w.
# The acting piece fixes the loop leg through its grouplike half and kills
# it through the nilpotent half; the loop acts back on the nilpotent half
# by the sign of its doubling flag.  The interchange map braids a piece
# element past a loop element with that same sign rule.


def expected_action_on_loop(field):
    return LinMap.from_terms(
        field,
        (PIECE_DIM, LOOP_DIM),
        (LOOP_DIM,),
        {(j, z * LOOP_DIM + j): field.one for z in (0, 1) for j in range(LOOP_DIM)},
    )


def expected_action_on_piece(field):
    one = field.one
    terms = {}
    for j in range(LOOP_DIM):
        sign = one if j < 6 else -one
        terms[(0, 0 * LOOP_DIM + j)] = one
        terms[(1, 1 * LOOP_DIM + j)] = one
        terms[(2, 2 * LOOP_DIM + j)] = sign
        terms[(3, 3 * LOOP_DIM + j)] = sign
    return LinMap.from_terms(field, (PIECE_DIM, LOOP_DIM), (PIECE_DIM,), terms)


def expected_twist(field):
    one = field.one
    terms = {}
    for j in range(LOOP_DIM):
        flag_sign = one if j < 6 else -one
        for z in range(PIECE_DIM):
            terms[(j * PIECE_DIM + z, z * LOOP_DIM + j)] = one if z < 2 else flag_sign
    return LinMap.from_terms(field, (PIECE_DIM, LOOP_DIM), (LOOP_DIM, PIECE_DIM), terms)


# ---------------------------------------------------------------------------
# criteria


def test_criterion_1_doubled_loop(capsys):
    with criterion(capsys, 1, "doubled loop"):
        g = builtin_group("s3")
        loop = chein_double(g)
        assert loop.order == 2 * g.order == 12
        rep = validate_ip_loop(loop)
        assert rep.ok, str(rep)
        witness = loop_associativity_witness(loop)
        assert witness is not None
        a, b, c = witness
        assert loop.mul(loop.mul(a, b), c) != loop.mul(a, loop.mul(b, c))


def test_criterion_2_loop_algebra(capsys):
    with criterion(capsys, 2, "loop algebra"):
        la = loop_algebra(chein_double(builtin_group("s3")))
        assert la.dim == 12
        assert validate_hopf_quasigroup(la).ok
        assert check_antipode_properties(la).ok
        assert is_cocommutative(la)
        same(compose(la.antipode, la.antipode), la.ident())


def test_criterion_3_four_dimensional_algebra(capsys):
    with criterion(capsys, 3, "four-dimensional algebra"):
        t = taft_algebra()
        one = t.field.one
        # Product columns are (left index)*4 + (right index) on basis
        # 1, x, y, w; the nine products of non-identity elements are
        # x*x = 1, x*y = w, x*w = y, y*x = -w, w*x = -y, and the four
        # vanishing products y*y, y*w, w*y, w*w.
        expected_product = LinMap.from_terms(
            t.field,
            (4, 4),
            (4,),
            {
                (0, 0): one,  # 1 * 1
                (1, 1): one,  # 1 * x
                (2, 2): one,  # 1 * y
                (3, 3): one,  # 1 * w
                (1, 4): one,  # x * 1
                (0, 5): one,  # x * x = 1
                (3, 6): one,  # x * y = w
                (2, 7): one,  # x * w = y
                (2, 8): one,  # y * 1
                (3, 9): -one,  # y * x = -w
                (3, 12): one,  # w * 1
                (2, 13): -one,  # w * x = -y
            },
        )
        expected_unit = LinMap.from_terms(t.field, (1,), (4,), {(0, 0): one})
        expected_counit = LinMap.from_terms(t.field, (4,), (1,), {(0, 0): one, (0, 1): one})
        # 1 and x are grouplike; y splits as y (x) x + 1 (x) y and
        # w as w (x) 1 + x (x) w.
        expected_coproduct = LinMap.from_terms(
            t.field,
            (4,),
            (4, 4),
            {(0, 0): one, (5, 1): one, (9, 2): one, (2, 2): one, (12, 3): one, (7, 3): one},
        )
        # The antipode fixes 1 and x and swaps y and w up to one sign:
        # y -> w, w -> -y.
        expected_antipode = LinMap.from_terms(
            t.field, (4,), (4,), {(0, 0): one, (1, 1): one, (3, 2): one, (2, 3): -one}
        )
        same(t.product, expected_product)
        same(t.unit, expected_unit)
        same(t.counit, expected_counit)
        same(t.coproduct, expected_coproduct)
        same(t.antipode, expected_antipode)
        assert validate_hopf_quasigroup(t).ok
        assert validate_hopf_coquasigroup(as_coquasigroup(t)).ok
        assert validate_bimonoid(t).ok
        assert check_antipode_properties(t).ok
        assert not is_commutative(t)
        assert not is_cocommutative(t)


def test_criterion_4_pairing_actions(capsys, pair):
    with criterion(capsys, 4, "pairing actions"):
        same(pair.action_a, expected_action_on_loop(pair.a.field))
        same(pair.action_h, expected_action_on_piece(pair.h.field))


def test_criterion_5_matched_pair(capsys, pair):
    with criterion(capsys, 5, "matched pair"):
        rep = validate_matched_pair(pair)
        assert rep.ok, str(rep)
        same(induced_law(pair).twist, expected_twist(pair.a.field))


def test_criterion_6_double_cross_product(capsys, dcp):
    with criterion(capsys, 6, "double cross product"):
        with gzip.open(os.path.join(GOLDEN_DIR, "dcp48_numeric.json.gz")) as fh:
            golden = json.loads(fh.read())
        n = dcp.dim
        assert n == 48
        assert all(
            str(golden["product"][i][j]) == str(dcp.product.entries[i, j])
            for i in range(n)
            for j in range(n * n)
        )
        assert all(
            str(golden["antipode"][i][j]) == str(dcp.antipode.entries[i, j])
            for i in range(n)
            for j in range(n)
        )
        assert validate_hopf_quasigroup(dcp).ok
        assert not is_commutative(dcp)
        assert not is_cocommutative(dcp)


def test_criterion_7_factorization_roundtrip(capsys, pair, fact):
    with criterion(capsys, 7, "factorization roundtrip"):
        rep = check_factorization(fact)
        assert rep.ok, str(rep)
        # Gluing the two canonical inclusions multiplies to the identity.
        same(fact.mult_ah, LinMap.identity(QQ, (48,)).reshape(dom=(12, 4), cod=(48,)))
        law = extract_distributive_law(fact)
        same(law.twist, expected_twist(QQ))
        recovered = extract_matched_pair(fact)
        same(recovered.action_a, pair.action_a)
        same(recovered.action_h, pair.action_h)
        rep = verify_factorization_theorem(fact)
        assert rep.ok, str(rep)


def test_criterion_8_duality(capsys, dcp, fact):
    with criterion(capsys, 8, "duality"):
        assert validate_hopf_coquasigroup(dualize(dcp)).ok
        cofact = dual_factorization(fact)
        rep = check_cofactorization(cofact)
        assert rep.ok, str(rep)
        # Canonical projections paste to the identity one way and to the
        # transposed reverse gluing map the other way.
        same(cofact.comult_db, LinMap.identity(QQ, (48,)).reshape(dom=(48,), cod=(12, 4)))
        same(cofact.comult_bd, transpose(fact.mult_ha))
        rep = verify_cofactorization_theorem(cofact)
        assert rep.ok, str(rep)
        # Double dual is the identity on every catalog object carrying
        # linear data (loops carry none, so they have nothing to dualize).
        for entry in list_entries():
            obj = build(entry.name)
            if isinstance(obj, HopfStructure):
                twice = dualize(dualize(obj))
                assert twice == obj
                assert twice.labels == obj.labels
            elif isinstance(obj, LinMap):
                same(transpose(transpose(obj)), obj)
            elif isinstance(obj, MatchedPair):
                same(transpose(transpose(obj.action_a)), obj.action_a)
                same(transpose(transpose(obj.action_h)), obj.action_h)
            elif isinstance(obj, Factorization):
                back = dual_cofactorization(dual_factorization(obj))
                assert back.x == obj.x and back.a == obj.a and back.h == obj.h
                same(back.incl_a, obj.incl_a)
                same(back.incl_h, obj.incl_h)


def test_criterion_9_convolution_properties(capsys, dcp):
    with criterion(capsys, 9, "convolution properties"):
        quasigroups = [build("taft4"), dcp, build("loop_algebra:m_s3_2")]
        for h in quasigroups:
            ident = h.ident()
            unit_map = convolution_unit(h, h)
            same(convolution(h.antipode, ident, h, h), unit_map)
            same(convolution(ident, h.antipode, h, h), unit_map)
            assert check_antipode_properties(h).ok
            inv = convolution_inverse(h.antipode, h, h)
            assert inv is not None
            same(inv, ident)
            back = convolution_inverse(ident, h, h)
            assert back is not None
            same(back, h.antipode)
        sp = loop_taft_pairing()
        form_inv = convolution_inverse(sp.form, tensor_comonoid(sp.a, sp.h), scalar_magma(sp.field))
        assert form_inv is not None
        same(form_inv, sp.form)
        same(sp.form_inv, sp.form)


def test_criterion_10_negative_controls(capsys, pair, dcp, fact):
    with criterion(capsys, 10, "negative controls"):
        # One sign flipped in the interchange map: exactly the unit and
        # product compatibilities on the broken input and the two
        # antipode cancellations through the acting leg fail.
        law = induced_law(pair)
        bad_law = DistributiveLaw(h=law.h, a=law.a, twist=flip_column(law.twist, 24))
        assert failing(validate_distributive_law(bad_law)) == {
            ("distributive/product-compat-a", (3, 0, 0)),
            ("distributive/product-compat-h", (1, 2, 0)),
            ("distributive/unit-a", (2, 0)),
            ("distributive/product-compat-a-simplified", (2, 0, 0)),
            ("distributive/product-compat-h-simplified", (1, 2, 0)),
            ("a-comonoidal/antipode-cancel-h-1", (2, 0, 0)),
            ("a-comonoidal/antipode-cancel-h-2", (2, 0, 0)),
        }

        # One sign flipped in the antipode: exactly the four mixed
        # antipode identities fail, the bimonoid tier is untouched.
        bad_hopf = HopfQuasigroup(
            unit=dcp.unit,
            product=dcp.product,
            counit=dcp.counit,
            coproduct=dcp.coproduct,
            antipode=flip_column(dcp.antipode, 2),
        )
        assert failing(validate_hopf_quasigroup(bad_hopf)) == {
            ("antipode-left-1", (2, 0)),
            ("antipode-left-2", (2, 0)),
            ("antipode-right-1", (0, 2)),
            ("antipode-right-2", (0, 2)),
        }
        assert failing(check_antipode_properties(bad_hopf)) == {
            ("antipode-antimultiplicative", (1, 2)),
            ("antipode-convolution-left", (2,)),
            ("antipode-convolution-right", (2,)),
        }

        # One sign flipped in the action on the acting piece: exactly the
        # unit and associativity laws of that action and the three pair
        # conditions routing through it fail; the other action's suite
        # stays green.
        bad_pair = MatchedPair(
            a=pair.a,
            h=pair.h,
            action_a=pair.action_a,
            action_h=flip_column(pair.action_h, 24),
        )
        assert failing(validate_matched_pair(bad_pair)) == {
            ("action-h/action-unit", (2, 0)),
            ("action-h/action-associative", (2, 0, 0)),
            ("pair/cancel-h-1", (2, 0, 0)),
            ("pair/cancel-h-2", (2, 0, 0)),
            ("pair/product-action-h", (1, 2, 0)),
        }

        # One sign flipped in an inclusion: the embedding precondition
        # itself fails, on exactly the product and antipode morphism
        # axioms of that inclusion.
        bad_fact = Factorization(
            x=fact.x,
            a=fact.a,
            h=fact.h,
            incl_a=fact.incl_a,
            incl_h=flip_column(fact.incl_h, 2),
        )
        with pytest.raises(NotFactorizationError) as excinfo:
            check_factorization(bad_fact)
        assert failing(excinfo.value.report) == {
            ("inclusion-h/morphism-product", (1, 2)),
            ("inclusion-h/morphism-antipode", (2,)),
        }

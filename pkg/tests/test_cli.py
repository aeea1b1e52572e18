"""End-to-end command tests: exit codes, reports, files, goldens."""

import contextlib
import io
import json
import os

import pytest

from hqg.catalog import CatalogEntry, _ENTRIES, build
from hqg.cli import main
from hqg.products import taft_algebra
from hqg.serialize import dumps, load, save

GOLDEN_DIR = os.path.join(os.path.dirname(__file__), "golden")


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


# ---------------------------------------------------------------------------
# list / build


def test_list_names_every_fixed_entry():
    code, out, _ = run("list")
    assert code == 0
    for name in _ENTRIES:
        assert name in out


def test_build_emits_a_parseable_document(tmp_path):
    path = tmp_path / "taft.json"
    code, out, _ = run("build", "taft4", "--out", str(path))
    assert code == 0 and out == ""
    doc = json.loads(path.read_text())
    assert doc["kind"] == "hopf_quasigroup" and doc["dim"] == 4
    assert doc["labels"] == ["1", "x", "y", "w"]


def test_build_stdout_equals_library_dump():
    code, out, _ = run("build", "z4")
    assert code == 0
    assert out == dumps(build("z4"))


def test_build_reemits_a_file_unchanged(tmp_path):
    path = tmp_path / "m.json"
    code, _, _ = run("build", "m_s3_2", "--out", str(path))
    assert code == 0
    code, out, _ = run("build", str(path))
    assert code == 0 and out == path.read_text()


def test_build_gate_fails_on_a_false_manifest_claim(monkeypatch):
    bogus = CatalogEntry(
        "bogus4",
        "hopf_quasigroup",
        4,
        ("commutative",),
        "wrong on purpose",
        taft_algebra,
    )
    monkeypatch.setitem(_ENTRIES, "bogus4", bogus)
    code, out, err = run("build", "bogus4")
    assert code == 1 and out == ""
    assert "bogus4/commutative: FAIL" in err


def test_build_unknown_name_exits_2():
    code, _, err = run("build", "zz_top")
    assert code == 2 and "unknown catalog name" in err


def test_build_dynamic_names():
    code, out, _ = run("build", "z7")
    assert code == 0 and json.loads(out)["order"] == 7
    code, out, _ = run("build", "loop_algebra:z3")
    assert code == 0 and json.loads(out)["dim"] == 3


# ---------------------------------------------------------------------------
# verify


@pytest.mark.parametrize(
    "name", ["s3", "z5", "m_s3_2", "taft4", "taft4_dual", "mp48", "dcp48_fact"]
)
def test_verify_catalog_entries_pass(name):
    code, out, _ = run("verify", name)
    assert code == 0 and out.endswith("checks)\n") and "PASS" in out


@pytest.mark.parametrize("level", ["bimonoid", "quasigroup", "coquasigroup", "antipode-props"])
def test_verify_levels_on_a_hopf_algebra(level):
    # associative and coassociative, so both flavor suites pass
    code, out, _ = run("verify", "taft4", f"--level={level}")
    assert code == 0 and "PASS" in out


def test_verify_json_report(tmp_path):
    path = tmp_path / "rep.json"
    code, out, _ = run("verify", "taft4", "--json", "--out", str(path))
    assert code == 0 and out == ""
    rep = json.loads(path.read_text())
    assert rep["ok"] is True
    assert all(c["passed"] for c in rep["checks"])
    assert any(c["axiom"] == "antipode-left-1" for c in rep["checks"])


def test_verify_corrupted_file_exits_1_and_names_the_axiom(tmp_path):
    path = tmp_path / "bad.json"
    code, _, _ = run("build", "taft4", "--out", str(path))
    assert code == 0
    doc = json.loads(path.read_text())
    entries = doc["maps"]["product"]["entries"]
    assert entries[3][9] == "-1"  # the one negative structure constant
    entries[3][9] = "1"
    path.write_text(json.dumps(doc))
    code, out, _ = run("verify", str(path))
    assert code == 1
    assert "coproduct-multiplicative: FAIL at basis input (2, 2)" in out
    assert "FAIL (" in out


def test_verify_garbage_file_exits_2(tmp_path):
    path = tmp_path / "garbage.json"
    path.write_text("{]")
    code, _, err = run("verify", str(path))
    assert code == 2 and "invalid JSON" in err


def test_verify_level_type_mismatch_exits_2():
    code, _, err = run("verify", "taft4", "--level=matched-pair")
    assert code == 2 and "matched pair" in err


def test_verify_loop_rejects_level_flag():
    code, _, err = run("verify", "m_s3_2", "--level=quasigroup")
    assert code == 2 and "no verification levels" in err


def test_verify_missing_file_exits_2():
    code, _, err = run("verify", "no/such/file.json")
    assert code == 2 and "no such file" in err


# ---------------------------------------------------------------------------
# table


def test_table_of_the_48_dim_structure_matches_the_golden_bytes():
    code, out, _ = run("table", "dcp48")
    assert code == 0
    with open(os.path.join(GOLDEN_DIR, "dcp48_table.txt"), encoding="utf-8") as fh:
        assert out == fh.read()


def test_numeric_golden_matches_the_built_matrices():
    import gzip

    with gzip.open(os.path.join(GOLDEN_DIR, "dcp48_numeric.json.gz")) as fh:
        golden = json.loads(fh.read())
    h = build("dcp48")
    n = h.dim
    assert all(
        str(golden["product"][i][j]) == str(h.product.entries[i, j])
        for i in range(n)
        for j in range(n * n)
    )
    assert all(
        str(golden["antipode"][i][j]) == str(h.antipode.entries[i, j])
        for i in range(n)
        for j in range(n)
    )


def test_table_label_override_and_mismatch(tmp_path):
    code, out, _ = run("table", "taft4", "--basis-labels", "e,g,n,gn")
    assert code == 0 and "| gn" in out and "| w" not in out
    code, _, err = run("table", "taft4", "--basis-labels", "a,b")
    assert code == 2 and "4" in err


def test_table_of_a_loop_shows_products_and_inverses():
    code, out, _ = run("table", "z3")
    assert code == 0
    assert "inverse" in out and "1 -> 2" in out


def test_table_rejects_compound_kinds():
    code, _, err = run("table", "mp48")
    assert code == 2 and "cannot render" in err


# ---------------------------------------------------------------------------
# dual


def test_dual_twice_restores_the_exact_file_bytes(tmp_path):
    one = tmp_path / "t.json"
    two = tmp_path / "td.json"
    back = tmp_path / "tdd.json"
    assert run("build", "taft4", "--out", str(one))[0] == 0
    assert run("dual", str(one), "--out", str(two))[0] == 0
    assert run("dual", str(two), "--out", str(back))[0] == 0
    assert one.read_text() == back.read_text()
    assert json.loads(two.read_text())["kind"] == "hopf_coquasigroup"


def test_dual_of_a_loop_exits_2():
    code, _, err = run("dual", "m_s3_2")
    assert code == 2 and "dualization needs" in err


# ---------------------------------------------------------------------------
# factorize


def test_factorize_writes_the_matched_pair_it_came_from(tmp_path):
    out_path = tmp_path / "pair.json"
    code, out, _ = run("factorize", "dcp48_fact", "--out", str(out_path))
    assert code == 0
    assert "PASS" in out and str(out_path) in out
    # canonical factorization of the glued pair extracts that same pair,
    # labels included, so the files agree byte for byte
    assert out_path.read_text() == dumps(build("mp48"))


def test_factorize_from_ambient_and_inclusion_files(tmp_path):
    paths = {}
    for name in ("dcp48", "dcp48_incl_a", "dcp48_incl_h"):
        paths[name] = tmp_path / f"{name}.json"
        assert run("build", name, "--out", str(paths[name]))[0] == 0
    out_path = tmp_path / "pair.json"
    code, out, _ = run(
        "factorize",
        str(paths["dcp48"]),
        str(paths["dcp48_incl_a"]),
        str(paths["dcp48_incl_h"]),
        "--out",
        str(out_path),
    )
    assert code == 0 and "PASS" in out
    got = json.loads(out_path.read_text())
    want = json.loads(dumps(build("mp48")))
    # induced pieces carry no labels; every matrix must agree exactly
    assert got["action_a"] == want["action_a"]
    assert got["action_h"] == want["action_h"]
    for side in ("a", "h"):
        assert got[side]["maps"] == want[side]["maps"]


def test_factorize_broken_inclusion_exits_1_naming_the_morphism_axiom(tmp_path):
    path = tmp_path / "fact.json"
    assert run("build", "dcp48_fact", "--out", str(path))[0] == 0
    doc = json.loads(path.read_text())
    rows = doc["incl_h"]["entries"]
    flipped = [i for i, row in enumerate(rows) if row[2] != "0"]
    assert len(flipped) == 1
    rows[flipped[0]][2] = str(-int(rows[flipped[0]][2]))
    path.write_text(json.dumps(doc))
    code, out, err = run("factorize", str(path))
    assert code == 1
    assert "inclusion-h/morphism-product" in err
    assert "inclusion-h/morphism-antipode" in err


def test_factorize_non_factorizing_pieces_exit_1(tmp_path):
    # a unit-only overlap that multiplies onto everything but never regroups
    from hqg.exactlin import QQ, LinMap
    from hqg.loops import FiniteLoop, builtin_group, chein_double, loop_algebra

    big_loop = chein_double(builtin_group("s3"))
    big = loop_algebra(big_loop)
    members_v, members_z = [0, 1, 6, 7], [0, 4, 5]
    incl_v = LinMap.from_terms(
        QQ, (4,), (12,), {(members_v[k], k): QQ.one for k in range(4)}
    )
    incl_z = LinMap.from_terms(
        QQ, (3,), (12,), {(members_z[k], k): QQ.one for k in range(3)}
    )
    paths = [tmp_path / n for n in ("x.json", "iv.json", "iz.json")]
    save(big, paths[0])
    save(incl_v, paths[1])
    save(incl_z, paths[2])
    code, out, _ = run("factorize", *map(str, paths))
    assert code == 1
    assert "factorization/assoc-ah-x: FAIL at basis input (1, 1, 6)" in out
    assert not os.path.exists("extracted_matched_pair.json")


def test_factorize_wrong_arity_exits_2():
    code, _, err = run("factorize", "dcp48", "dcp48_incl_a")
    assert code == 2 and "three files" in err


def test_factorize_non_closed_inclusion_exits_1(tmp_path):
    from hqg.exactlin import QQ, LinMap

    x_path = tmp_path / "t.json"
    assert run("build", "taft4", "--out", str(x_path))[0] == 0
    # span{1, y} is closed under product but not coproduct
    span_1y = LinMap.from_terms(QQ, (2,), (4,), {(0, 0): QQ.one, (2, 1): QQ.one})
    span_1x = LinMap.from_terms(QQ, (2,), (4,), {(0, 0): QQ.one, (1, 1): QQ.one})
    bad, good = tmp_path / "iy.json", tmp_path / "ix.json"
    save(span_1y, bad)
    save(span_1x, good)
    code, _, err = run("factorize", str(x_path), str(good), str(bad))
    assert code == 1 and "not closed under the coproduct" in err


# ---------------------------------------------------------------------------
# field flag


def test_field_flag_selects_prime_scalars():
    code, out, _ = run("build", "taft4", "--field=fp:5")
    assert code == 0
    doc = json.loads(out)
    assert doc["field"] == {"kind": "prime", "p": 5}
    code, _, _ = run("verify", "taft4", "--field=fp:5")
    assert code == 0


@pytest.mark.parametrize("bad", ["fp:2", "fp:9", "fp:x", "banana"])
def test_bad_field_flags_exit_2(bad):
    code, _, err = run("build", "taft4", f"--field={bad}")
    assert code == 2 and "error" in err

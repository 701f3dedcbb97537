"""End-to-end runs of the command line interface via main()."""

import json

import pytest

from hochcap import axioms, config, serialize, zoo
from hochcap.bimodules import Bimodule
from hochcap.cli import main
from hochcap.complexes import homology_dims
from hochcap.linalg import SparseMat


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    return code, json.loads(out), err


def test_zoo_list(capsys):
    code, out, _ = run(capsys, "zoo", "list")
    assert code == 0
    for name in zoo.ZOO:
        assert name in out


def test_zoo_list_json(capsys):
    code, payload, _ = run_json(capsys, "zoo", "list")
    assert code == 0
    assert [row["name"] for row in payload["algebras"]] == list(zoo.ZOO)
    assert all(row["description"] for row in payload["algebras"])


def test_zoo_show_text(capsys):
    code, out, _ = run(capsys, "zoo", "show", "two_by_two_matrices")
    assert code == 0
    assert "dimension  4" in out and "center     dim 1" in out


def test_zoo_show_json_round_trips(capsys):
    code, out, _ = run(capsys, "zoo", "show", "f2_c2", "--format", "json")
    assert code == 0
    B, _ = serialize.loads(out)
    A = zoo.get("f2_c2")
    assert (B.field, B.basis, B.unit, B.mult) == (A.field, A.basis, A.unit, A.mult)


def test_zoo_show_unknown(capsys):
    code, _, err = run(capsys, "zoo", "show", "nope")
    assert code == 2 and "nope" in err


def test_homology_text(capsys):
    code, out, _ = run(capsys, "homology", "dual_numbers")
    assert code == 0
    for n in range(5):
        assert f"H_{n}  dim 1" in out or f"H_{n}  dim 2" in out
    assert "H_0  dim 2" in out


def test_homology_json(capsys):
    code, payload, _ = run_json(capsys, "homology", "dual_numbers")
    assert code == 0
    assert payload["homology"] == [2, 1, 1, 1, 1]
    assert payload["module"] == "regular"


def test_cohomology_coinduced_vanishes(capsys):
    code, payload, _ = run_json(
        capsys, "cohomology", "truncated_cubic", "--module", "coinduced",
        "--max-degree", "3",
    )
    assert code == 0
    assert payload["cohomology"][1:] == [0, 0, 0]


def test_homology_induced_vanishes(capsys):
    code, payload, _ = run_json(
        capsys, "homology", "dual_numbers", "--module", "induced",
        "--max-degree", "3",
    )
    assert code == 0
    assert payload["homology"][1:] == [0, 0, 0]


def test_module_from_file(capsys, tmp_path):
    A = zoo.get("dual_numbers")
    fld = A.field
    ident = SparseMat.identity(1, fld)
    zero = SparseMat.zero(1, 1, fld)
    S = Bimodule(A, 1, (ident, zero), (ident, zero), label="torsion").validate()
    p = tmp_path / "dual.json"
    p.write_text(serialize.dumps(A, bimodules={"torsion": S}))
    code, payload, _ = run_json(
        capsys, "homology", str(p), "--module", "torsion", "--max-degree", "2",
    )
    assert code == 0
    assert payload["homology"] == homology_dims(S, 2)


def test_unknown_module(capsys):
    code, _, err = run(capsys, "homology", "dual_numbers", "--module", "bogus")
    assert code == 2
    assert "bogus" in err and "regular" in err


def test_unknown_algebra(capsys):
    code, _, err = run(capsys, "homology", "no_such_algebra")
    assert code == 2 and "zoo list" in err


def test_cap_dual_numbers_degree_one(capsys):
    # the only H_1 x H^1 product lands on the class of the nilpotent
    code, payload, _ = run_json(capsys, "cap", "dual_numbers", "1", "1")
    assert code == 0
    assert payload["chain_classes"] == 1 and payload["cochain_classes"] == 1
    assert payload["target_classes"] == 2
    assert payload["products"] == [[["0", "1"]]]


def test_cap_text_output(capsys):
    code, out, _ = run(capsys, "cap", "dual_numbers", "1", "1")
    assert code == 0
    assert "h[0] cap c[0] = (0, 1)" in out


def test_cap_bad_degrees(capsys):
    code, _, err = run(capsys, "cap", "dual_numbers", "0", "1")
    assert code == 2 and err.startswith("error:")


def test_validate_file(capsys, tmp_path):
    p = tmp_path / "alg.json"
    p.write_text(serialize.dumps(zoo.get("product_qq")))
    code, payload, _ = run_json(capsys, "validate", str(p))
    assert code == 0
    assert payload["ok"] is True and payload["dimension"] == 2
    assert payload["bimodules"] == []


def test_validate_rejects_garbage(capsys, tmp_path):
    p = tmp_path / "alg.json"
    p.write_text("{]")
    code, _, err = run(capsys, "validate", str(p))
    assert code == 2 and "alg.json" in err


def test_verify_clean(capsys):
    code, payload, _ = run_json(capsys, "verify", "dual_numbers", "--max-degree", "1")
    assert code == 0
    assert payload["summary"]["fail"] == 0
    assert payload["summary"]["skip"] == 2
    assert all(set(r) == {"check", "instance", "degrees", "status", "detail"}
               for r in payload["results"])


def test_verify_reports_failures(capsys, monkeypatch):
    monkeypatch.setattr(axioms, "HOMOLOGY_SIGN_OFFSET", 1)
    code, payload, _ = run_json(capsys, "verify", "dual_numbers", "--max-degree", "2")
    assert code == 1
    assert payload["summary"]["fail"] > 0


def test_verify_check_subset(capsys):
    code, payload, _ = run_json(
        capsys, "verify", "product_qq", "--checks", "center-linearity",
        "--max-degree", "2",
    )
    assert code == 0
    assert payload["results"]
    assert {r["check"] for r in payload["results"]} == {"center-linearity"}


def test_verify_unknown_check(capsys):
    code, _, err = run(capsys, "verify", "dual_numbers", "--checks", "bogus")
    assert code == 2 and "bogus" in err


def test_verify_json_is_deterministic(capsys):
    argv = ("verify", "f2_c2", "--max-degree", "2", "--seed", "7", "--format", "json")
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second


def test_memory_cap_trips_and_restores(capsys):
    before = config.max_coordinates()
    code, _, err = run(
        capsys, "--memory-cap", "10", "homology", "two_by_two_matrices",
    )
    assert code == 3
    assert "refusing to allocate" in err
    assert config.max_coordinates() == before


def test_memory_cap_must_be_positive(capsys):
    code, _, err = run(capsys, "--memory-cap", "-1", "homology", "dual_numbers")
    assert code == 2 and "positive" in err


def test_text_is_default_format(capsys):
    code, out, _ = run(capsys, "homology", "rationals", "--max-degree", "1")
    assert code == 0
    with pytest.raises(json.JSONDecodeError):
        json.loads(out)

import json

import pytest

from uqb2 import cli


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    payload = json.loads(captured.out) if captured.out.strip() else None
    return code, payload, captured.err


def test_nf_command(capsys):
    code, out, _ = run_cli(capsys, "nf", "--m", "5", "e2*e1")
    assert code == 0
    assert len(out["terms"]) == 2
    # q^-2 = q^3 at m = 5
    assert out["terms"][0] == {"i": 0, "j": 0, "k": 1, "n": 1, "coeff": ["0", "0", "0", "1"]}
    assert out["terms"][1]["coeff"] == ["0", "0", "0", "-1"]


def test_nf_terms_sorted_deterministically(capsys):
    code, out, _ = run_cli(capsys, "nf", "--m", "5", "e2*e2*e1 + z - z")
    assert code == 0
    keys = [(t["i"], t["j"], t["k"], t["n"]) for t in out["terms"]]
    assert keys == sorted(keys)


def test_central_command(capsys):
    code, out, _ = run_cli(capsys, "central", "--m", "5", "e1")
    assert code == 0
    assert out["central"] is False
    assert out["witness"]["against"] in ("e1", "e2")
    code, out, _ = run_cli(capsys, "central", "--m", "5", "e1^5")
    assert code == 0
    assert out["central"] is True and out["witness"] is None
    code, out, _ = run_cli(capsys, "central", "--m", "5", "z1")
    assert out["central"] is True


def test_pideg_named_matrix(capsys):
    code, out, _ = run_cli(capsys, "pideg", "--m", "8", "--matrix", "uqb2")
    assert code == 0
    assert out == {
        "m": 8,
        "matrix": "uqb2",
        "invariant_factors": [2, 2, 0, 0],
        "pi_degree": 4,
    }


def test_pideg_matrix_file(tmp_path, capsys):
    path = tmp_path / "H.txt"
    path.write_text("0 2 -2 0\n-2 0 2 0\n2 -2 0 0\n0 0 0 0\n")
    code, out, _ = run_cli(capsys, "pideg", "--m", "5", "--matrix", str(path))
    assert code == 0
    assert out["pi_degree"] == 5


def test_pideg_bad_matrix_file(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("1 2\n3\n")
    code, _, err = run_cli(capsys, "pideg", "--m", "5", "--matrix", str(path))
    assert code == 2
    assert "square" in err


def test_build_and_check_module(capsys):
    code, out, _ = run_cli(capsys, "build-module", "--m", "5", "--family", "V4p",
                           "--params", "1,1,0")
    assert code == 0
    assert out["dim"] == 5
    assert set(out["generators"]) == {"e1", "e2", "e3", "z"}
    code, out, _ = run_cli(capsys, "check-module", "--m", "5", "--family", "V4p",
                           "--params", "1,1,0")
    assert code == 0
    assert out["all_zero"] is True


def test_simple_and_character(capsys):
    code, out, _ = run_cli(capsys, "simple", "--m", "5", "--family", "V1p",
                           "--params", "1,1,1,0")
    assert code == 0
    assert out["simple"] is True and out["certificate"] == 25
    code, out, _ = run_cli(capsys, "character", "--m", "5", "--family", "V2p",
                           "--params", "q,2,1")
    assert code == 0
    assert out["characters"]["e1^l"]["zero"] is True
    assert out["characters"]["e3^l"]["zero"] is False


def test_character_scalar_params_grammar(capsys):
    code, out, _ = run_cli(capsys, "character", "--m", "5", "--family", "V1p",
                           "--params", "1,q^-2,1/2,q^2-1")
    assert code == 0
    assert out["characters"]["z"]["zero"] is False


def test_iso_command(capsys):
    code, out, _ = run_cli(capsys, "iso", "--m", "5", "--family", "V1p",
                           "--params1", "1,q^-2,1,1", "--params2", "1,1,1,0")
    assert code == 0
    assert out["isomorphic"] is True
    assert out["witness_p"] == 1
    assert out["intertwiner"] is not None
    code, out, _ = run_cli(capsys, "iso", "--m", "5", "--family", "V2p",
                           "--params1", "1,1,1", "--params2", "1,1,q")
    assert code == 0
    assert out["isomorphic"] is False and out["intertwiner"] is None


def test_center_report_command(capsys):
    code, out, _ = run_cli(capsys, "center-report", "--m", "5")
    assert code == 0
    assert out["all_contracted_pass"] is True
    assert out["central"]["z1"] is True
    assert out["central"]["zp"] is False  # reported as computed
    assert out["zp_witness"]["against"] == "e1"


def test_torus_check_command(capsys):
    code, out, _ = run_cli(capsys, "torus-check", "--m", "6")
    assert code == 0
    assert out["all_contracted_pass"] is True
    assert all(out["relation_images_zero"].values())
    assert out["bracket_image_equals_X2X4X1"] is False


def test_conformance_command(capsys):
    code, out, _ = run_cli(capsys, "conformance", "--m", "6")
    assert code == 0
    assert out["all_pass"] is True
    names = {c["name"] for c in out["checks"]}
    assert "serre_relations_normal_form_to_zero" in names
    assert "classification_predicate_matches_solver" in names


def test_usage_errors_exit_2(capsys):
    code, out, err = run_cli(capsys, "nf", "--m", "5", "e1 +")
    assert code == 2 and out is None and "error" in err
    code, out, err = run_cli(capsys, "nf", "--m", "4", "e1")
    assert code == 2
    code, out, err = run_cli(capsys, "build-module", "--m", "5", "--family", "V2p",
                             "--params", "0,1,1")
    assert code == 2 and "nonzero" in err
    with pytest.raises(SystemExit) as exc:
        cli.main(["no-such-command"])
    assert exc.value.code == 2

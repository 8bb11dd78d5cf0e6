"""Command line behavior: subcommands, exit codes, JSON reports."""

import json

import pytest

from acceptcert.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_list_json(capsys):
    code, out, err = run_cli(capsys, "list", "--json")
    assert code == 0 and not err
    payload = json.loads(out)
    assert payload["schema"] == 1
    assert payload["command"] == "list"
    assert len(payload["certificates"]) == 9


def test_verify_single_certificate(capsys):
    code, out, err = run_cli(capsys, "verify", "su4_mod_center", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["passed"] is True
    assert payload["results"][0]["id"] == "su4_mod_center"
    assert payload["results"][0]["verdicts"]["oracle_agrees"] is True


def test_verify_text_mode(capsys):
    code, out, err = run_cli(capsys, "verify", "--filter", "scf_so_odd")
    assert code == 0
    assert "PASS" in out
    assert "certificate runs passed" in out


def test_verify_unknown_id_exits_2(capsys):
    code, out, err = run_cli(capsys, "verify", "no_such_cert")
    assert code == 2
    assert "unknown certificate id" in err


def test_verify_empty_filter_exits_2(capsys):
    code, out, err = run_cli(capsys, "verify", "--filter", "zzz*")
    assert code == 2
    assert "no certificates matched" in err


def test_verify_params_file(tmp_path, capsys):
    params = tmp_path / "grid.json"
    params.write_text(json.dumps({"sp1_diag": [{"m": 3, "eps": -1}]}))
    code, out, err = run_cli(capsys, "verify", "sp1_diag",
                             "--params", str(params), "--json")
    assert code == 0
    payload = json.loads(out)
    assert len(payload["results"]) == 1
    assert payload["results"][0]["params"] == {"m": 3, "eps": -1}


def test_verify_bad_params_file(tmp_path, capsys):
    params = tmp_path / "grid.json"
    params.write_text(json.dumps({"nonexistent": [{}]}))
    code, out, err = run_cli(capsys, "verify", "--params", str(params))
    assert code == 2


def test_scan_scf_json_roundtrip(capsys):
    code, out, err = run_cli(capsys, "scan-scf", "o-odd", "1", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == 1
    assert payload["matches_classification"] is True
    assert len(payload["rows"]) == 18
    fails = [(r["k"], r["m"]) for r in payload["rows"] if r["outcome"] == "fails"]
    assert sorted(fails) == [(1, 4), (2, 8), (3, 4), (6, 8)]
    assert json.loads(json.dumps(payload)) == payload


def test_scan_scf_rejects_bad_n(capsys):
    code, out, err = run_cli(capsys, "scan-scf", "o-odd", "0")
    assert code == 2


def test_scan_scf_rejects_bad_denominators(capsys):
    code, out, err = run_cli(capsys, "scan-scf", "so-odd", "1",
                             "--denominators", "4,zero")
    assert code == 2


def test_scan_scf_out_file(tmp_path, capsys):
    target = tmp_path / "scan.json"
    code, out, err = run_cli(capsys, "scan-scf", "so-odd", "1", "--json",
                             "--out", str(target))
    assert code == 0
    assert str(target) in out
    payload = json.loads(target.read_text())
    assert payload["family"] == "so-odd"
    assert payload["matches_classification"] is True


def surjective_generators(tmp_path):
    path = tmp_path / "gens.json"
    path.write_text(json.dumps({"generators": [
        [["0", "1", "0", "0"]] * 3,
        [["0", "0", "1", "0"]] * 3,
    ]}))
    return path


def test_crit3a1_small_family(tmp_path, capsys):
    path = surjective_generators(tmp_path)
    code, out, err = run_cli(capsys, "crit3a1", "--generators", str(path),
                             "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["applicable"] is True
    assert payload["rotation_group_order"] == 4
    assert payload["report"]["phi_surjective"] is True
    assert payload["witness_pair"] is None


def test_crit3a1_infinite_centralizer_exits_3(tmp_path, capsys):
    path = tmp_path / "gens.json"
    path.write_text(json.dumps({"generators": [
        [["0", "1", "0", "0"]] * 3,
    ]}))
    code, out, err = run_cli(capsys, "crit3a1", "--generators", str(path),
                             "--json")
    assert code == 3
    payload = json.loads(out)
    assert payload["applicable"] is False
    assert "parallel" in payload["reason"]


def test_crit3a1_malformed_generators_exits_2(tmp_path, capsys):
    path = tmp_path / "gens.json"
    path.write_text(json.dumps({"generators": [[["1", "0", "0"]] * 3]}))
    code, out, err = run_cli(capsys, "crit3a1", "--generators", str(path))
    assert code == 2

    path.write_text(json.dumps({"generators": [[["1", "1", "0", "0"]] * 3]}))
    code, out, err = run_cli(capsys, "crit3a1", "--generators", str(path))
    assert code == 2

    path.write_text("not json at all")
    code, out, err = run_cli(capsys, "crit3a1", "--generators", str(path))
    assert code == 2


def test_coordinate_sqrt_form(tmp_path, capsys):
    path = tmp_path / "gens.json"
    eta = ["1/2*sqrt(2)", "1/2*sqrt(2)", "0", "0"]
    jj = ["0", "0", "1", "0"]
    path.write_text(json.dumps({"generators": [
        [jj, eta, eta],
        [eta, jj, jj],
    ]}))
    code, out, err = run_cli(capsys, "crit3a1", "--generators", str(path),
                             "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["applicable"] is True


def test_max_closure_flag(capsys):
    code, out, err = run_cli(capsys, "crit3a1", "--max-closure", "2")
    assert code == 2
    code, out, err = run_cli(capsys, "crit3a1", "--max-closure", "-3")
    assert code == 2

import json

import pytest

from nacf.cli import main
from nacf.config import RunConfig, load_config_file, resolve_config


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run_cli(capsys, *argv)
    return code, json.loads(out)


def test_disc_4_record(capsys):
    code, doc = run_json(capsys, "disc", "4")
    assert code == 0 and doc["ok"]
    rec = doc["records"][0]
    assert rec["disc"] == "-200"
    assert rec["squarefree_part"] == "-2"
    assert rec["quad_field"] == "-2"
    assert rec["factorization"] == {"2": "3", "5": "2"}


def test_disc_with_m(capsys):
    code, doc = run_json(capsys, "disc", "3", "--m", "2")
    assert code == 0
    assert doc["records"][0]["disc"] == "-8"


def test_subfield_command(capsys):
    code, doc = run_json(capsys, "subfield", "17")
    assert code == 0
    assert doc["records"][0]["degenerate"] is True


def test_roots_command(capsys):
    code, doc = run_json(capsys, "roots", "4")
    assert code == 0 and doc["records"][0]["bound_ok"] is True


def test_bounds_fpn_command(capsys):
    code, doc = run_json(capsys, "bounds-fpn", "2", "11")
    assert code == 0 and doc["records"][0]["bound_ok"] is True


def test_irreducible_command(capsys):
    code, doc = run_json(capsys, "irreducible", "9")
    assert code == 0
    assert doc["records"][0]["kind"] == "PrimePowerN"


def test_scan_command_small_window(capsys):
    code, doc = run_json(capsys, "--scan", "2", "12", "scan")
    assert code == 0
    assert len(doc["records"]) == 11


def test_theta_command(capsys):
    code, doc = run_json(capsys, "theta", "10")
    assert code == 0
    assert doc["records"][2] == {"n": "3", "a": "-1"}


def test_thm51_command(capsys):
    code, doc = run_json(capsys, "thm51", "200", "--cube-bound", "25")
    assert code == 0
    assert doc["records"][0]["violations"] == []


def test_eta_command(capsys):
    code, doc = run_json(capsys, "eta", "50")
    assert code == 0
    first = doc["records"][0]
    assert first["a"] == "1" and first["first_mismatch_index"] == "2"


def test_identity_check_command(capsys):
    code, doc = run_json(capsys, "--scan", "2", "40", "identity-check")
    assert code == 0 and doc["records"][0]["all_hold"] is True


def test_galois_command_small(capsys):
    code, doc = run_json(capsys, "--window", "2", "3000", "galois", "4")
    assert code == 0
    rec = doc["records"][0]
    assert rec["group"] == "S3" and rec["agree"] is True


def test_tsv_format(capsys):
    code, out = run_cli(capsys, "--format", "tsv", "disc", "4")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("# command=disc")
    assert "disc=-200" in lines[1]


def test_usage_errors(capsys):
    assert main([]) == 2
    assert main(["no-such-command"]) == 2


def test_exit_code_on_violation(capsys):
    # n=4 is in the expectation table; an empty-ish window starves the
    # classifier, which must exit nonzero rather than pretend agreement
    code, doc = run_json(capsys, "--window", "2", "40", "galois", "4")
    assert code == 1


def test_config_file_and_overrides(tmp_path, capsys):
    cfg_file = tmp_path / "run.conf"
    cfg_file.write_text(
        "# comment\nprime_window = 2, 500\nscan_range = 2 9\ntol = 1e-8\n"
        "theta_nmax = 50\noutput_format = tsv\nthreads = 1\n"
    )
    values = load_config_file(str(cfg_file))
    assert values["prime_window"] == (2, 500)
    assert values["scan_range"] == (2, 9)

    class Args:
        config = str(cfg_file)
        window = None
        scan = (2, 5)
        tol = None
        theta_nmax = None
        format = "json"
        threads = None

    cfg = resolve_config(Args())
    assert cfg.prime_window == (2, 500)  # from file
    assert cfg.scan_range == (2, 5)  # flag wins
    assert cfg.output_format == "json"  # flag wins
    assert cfg.tol == 1e-8  # from file


def test_config_env_var(tmp_path, capsys, monkeypatch):
    cfg_file = tmp_path / "env.conf"
    cfg_file.write_text("scan_range = 2 6\n")
    monkeypatch.setenv("NACF_CONFIG", str(cfg_file))
    code, doc = run_json(capsys, "scan")
    assert code == 0
    assert len(doc["records"]) == 5


def test_config_validation():
    with pytest.raises(ValueError):
        RunConfig(prime_window=(10, 5))
    with pytest.raises(ValueError):
        RunConfig(tol=-1)
    with pytest.raises(ValueError):
        RunConfig(output_format="xml")


def test_bad_config_file(tmp_path):
    bad = tmp_path / "bad.conf"
    bad.write_text("nonsense_key = 5\n")
    with pytest.raises(ValueError):
        load_config_file(str(bad))

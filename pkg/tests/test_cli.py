import json
import subprocess
import sys

from wsuper.algebra import build_psl22

OK_SUITE = "identities,generators,deg0,deg01,central,c0,b_invariance,pbw,one_dim"


def run_cli(*args, **kwargs):
    return subprocess.run([sys.executable, "-m", "wsuper.cli", *args],
                          capture_output=True, text=True, timeout=600, **kwargs)


def test_info_psl22_reports_grading_dimensions():
    out = run_cli("info", "--family", "psl22")
    assert out.returncode == 0
    assert "s=0 r=4" in out.stdout
    assert "ceiling convention" in out.stdout


def test_info_sl21_dimension():
    out = run_cli("info", "--family", "sl", "--m", "2", "--n", "1")
    assert out.returncode == 0
    assert "dim 8" in out.stdout


def test_info_json_summary():
    out = run_cli("info", "--family", "psl22", "--format", "json")
    obj = json.loads(out.stdout)
    assert obj["s"] == 0 and obj["r"] == 4
    assert obj["d0"] == 2 and obj["d1"] == 4
    assert obj["bound_exponents"] == {"p": "1", "two": 2}


def test_usage_errors_exit_2():
    assert run_cli("info", "--family", "sl", "--m", "2", "--n", "2").returncode == 2
    assert run_cli("info", "--family", "sl", "--m", "2").returncode == 2
    assert run_cli("info").returncode == 2
    assert run_cli("verify", "--family", "osp", "--m", "1", "--n", "3").returncode == 2


def test_verify_subset_passes_and_full_suite_is_honest():
    out = run_cli("verify", "--family", "psl22", "--suite", OK_SUITE)
    assert out.returncode == 0, out.stdout + out.stderr
    assert "c0 = 0" in out.stdout
    full = run_cli("verify", "--family", "psl22")
    assert full.returncode == 1
    assert "scalar_reduction" in full.stdout and "FAIL" in full.stdout


def test_verify_full_default_suite_green_at_s_equals_r():
    out = run_cli("verify", "--family", "sl", "--m", "3", "--n", "1")
    assert out.returncode == 0, out.stdout + out.stderr
    assert "c0 = -1/2" in out.stdout
    assert "all pass" in out.stdout


def test_verify_corrupt_negative_control():
    out = run_cli("verify", "--family", "psl22", "--corrupt", "theta-v-sign")
    assert out.returncode == 1
    assert "FAIL" in out.stdout


def test_c0_command_json():
    out = run_cli("c0", "--family", "psl22", "--format", "json")
    assert out.returncode == 0
    obj = json.loads(out.stdout)
    assert obj["status"] == "pass"
    assert obj["c0"]["formula"] == "1"
    assert obj["c0"]["consistent"] is True
    values = {p["c0"] for p in obj["c0"]["pairs"] if p["c0"] is not None}
    assert values == {"0"}


def test_kw_command_with_prime():
    out = run_cli("kw", "--family", "psl22", "--prime", "7", "--format", "json")
    obj = json.loads(out.stdout)
    assert obj["exponent_p"] == "1" and obj["exponent_two"] == 2
    assert obj["value"] == "28"          # 7^1 * 2^2
    assert "warning" not in obj


def test_kw_warns_on_restricted_prime_but_computes():
    out = run_cli("kw", "--family", "sl", "--m", "2", "--n", "1",
                  "--prime", "2", "--format", "json")
    obj = json.loads(out.stdout)
    assert obj["warning"]
    assert obj["value"] == "4"           # 2^1 * 2^1


def test_export_reimport_identical_verification(tmp_path):
    table = tmp_path / "psl22.json"
    out = run_cli("export", "--family", "psl22", "--format", "json",
                  "--out", str(table))
    assert out.returncode == 0
    alg = build_psl22()
    e = ["0"] * alg.dim
    e[alg.basis_names.index("E[0,1]")] = "1"
    evec = ",".join(e)
    by_family = run_cli("verify", "--family", "psl22", "--suite",
                        "identities,c0", "--format", "json")
    by_table = run_cli("verify", "--table", str(table), "--e", evec,
                       "--suite", "identities,c0", "--format", "json")
    assert by_family.returncode == 0 and by_table.returncode == 0
    assert by_family.stdout == by_table.stdout


def test_json_reports_are_byte_identical_across_runs():
    a = run_cli("verify", "--family", "osp", "--m", "1", "--n", "2",
                "--suite", "identities,deg0,c0", "--format", "json")
    b = run_cli("verify", "--family", "osp", "--m", "1", "--n", "2",
                "--suite", "identities,deg0,c0", "--format", "json")
    assert a.returncode == 0
    assert a.stdout == b.stdout


def test_table_with_missing_form_is_input_error(tmp_path):
    from wsuper.algebra import export_table
    doc = export_table(build_psl22())
    doc["form"] = []
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    e = ",".join(["0"] * 14)
    out = run_cli("verify", "--table", str(bad), "--e", e)
    assert out.returncode == 2
    assert "form" in out.stderr


def test_invalid_threads_env_rejected():
    import os
    env = dict(os.environ, WSUPER_THREADS="zero")
    out = subprocess.run([sys.executable, "-m", "wsuper.cli", "info",
                          "--family", "psl22"],
                         capture_output=True, text=True, env=env)
    assert out.returncode == 2

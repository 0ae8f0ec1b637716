"""End-to-end tests for the squarepairs command-line tool.

The binary under test comes from the SQUAREPAIRS_CLI environment variable so
the suite runs against whatever the build produced.
"""

import json
import os
import subprocess

import pytest

CLI = os.environ["SQUAREPAIRS_CLI"]

PAIR1_ROOTS1 = ["661", "1498", "1515"]
PAIR1_ROOTS2 = ["921", "1310", "1553"]
BIG_ROOT = "139103026758624524351136361446485174916405263544605811214366690119138"


def clean_env(**extra):
    env = {
        k: v
        for k, v in os.environ.items()
        if k not in ("SQUAREPAIRS_TEST_CORRUPT", "SQUAREPAIRS_WORKERS")
    }
    env.update(extra)
    return env


def run(*args, **extra_env):
    return subprocess.run([CLI, *args], capture_output=True, env=clean_env(**extra_env))


def payload(proc):
    doc = json.loads(proc.stdout)
    assert doc["schema_version"] == 1
    return doc


def test_verify_passes():
    proc = run("verify")
    assert proc.returncode == 0
    doc = payload(proc)
    assert doc["kind"] == "verification_report"
    assert doc["all_pass"] is True
    assert len(doc["checks"]) == 12
    assert all(c["pass"] for c in doc["checks"])


def test_verify_text_format():
    proc = run("verify", "--format", "text")
    assert proc.returncode == 0
    out = proc.stdout.decode()
    assert "[PASS]" in out
    assert "[FAIL]" not in out


def test_pair_solution():
    proc = run("pair", "--p", "14", "--q", "-27", "--r", "-25")
    assert proc.returncode == 0
    doc = payload(proc)
    assert doc["kind"] == "param_solution"
    assert doc["t"] == "6780"
    assert doc["u"] == "113/5"
    assert doc["pair"]["roots1"] == PAIR1_ROOTS1
    assert doc["pair"]["roots2"] == PAIR1_ROOTS2
    assert doc["pair"]["perimeter"] == "4976150"
    assert doc["pair"]["area_is_integer"] is False
    # stdout is the JSON document and nothing else.
    out = proc.stdout.decode()
    assert out.startswith("{") and out.endswith("}\n")


def test_pair_accepts_rational_arguments():
    proc = run("pair", "--p", "14/3", "--q", "-9", "--r", "-25/3")
    assert proc.returncode == 0
    doc = payload(proc)
    assert doc["pair"]["roots1"] == PAIR1_ROOTS1
    assert doc["pair"]["roots2"] == PAIR1_ROOTS2


def test_pair_text_format():
    proc = run("pair", "--p", "14", "--q", "-27", "--r", "-25", "--format", "text")
    assert proc.returncode == 0
    out = proc.stdout.decode()
    assert "perimeter:" in out
    assert "661,1498,1515" in out


@pytest.mark.parametrize(
    "triple,reason",
    [(("1", "2", "3"), "TrivialCondition"), (("0", "0", "0"), "ZeroTriple")],
)
def test_pair_rejections_exit_1(triple, reason):
    p, q, r = triple
    proc = run("pair", "--p", p, "--q", q, "--r", r)
    assert proc.returncode == 1
    doc = payload(proc)
    assert doc["kind"] == "rejection"
    assert doc["reason"] == reason


def test_pair_parse_error_exit_2():
    proc = run("pair", "--p", "abc", "--q", "1", "--r", "2")
    assert proc.returncode == 2
    assert b"error" in proc.stderr


@pytest.mark.parametrize(
    "args",
    [
        (),
        ("frobnicate",),
        ("search",),
        ("search", "--bound", "0"),
        ("search", "--bound", "1000001"),
        ("search", "--bound", "10", "--workers", "0"),
        ("generate", "--k", "65", "--j", "0"),
        ("generate", "--k", "1"),
        ("--format", "yaml", "verify"),
    ],
)
def test_usage_errors_exit_2(args):
    assert run(*args).returncode == 2


def test_help_exits_0():
    assert run("--help").returncode == 0


def test_search_finds_first_pair():
    proc = run("search", "--bound", "66")
    assert proc.returncode == 0
    assert b"scanned" in proc.stderr
    doc = payload(proc)
    assert doc["kind"] == "search_report"
    assert doc["bound"] == 66
    assert doc["triples_scanned"] == 162193
    assert len(doc["solutions"]) == 1
    sol = doc["solutions"][0]
    assert (sol["p"], sol["q"], sol["r"]) == ("14", "-27", "-25")
    assert sol["pair"]["roots1"] == PAIR1_ROOTS1
    assert sol["pair"]["roots2"] == PAIR1_ROOTS2


def test_search_deterministic_output(tmp_path):
    base = run("search", "--bound", "66", "--workers", "1")
    again = run("search", "--bound", "66", "--workers", "1")
    threaded = run("search", "--bound", "66", "--workers", "3")
    assert base.stdout == again.stdout == threaded.stdout

    out_file = tmp_path / "report.json"
    to_file = run("search", "--bound", "66", "--workers", "1", "--out", str(out_file))
    assert to_file.returncode == 0
    assert out_file.read_bytes() == base.stdout


def test_search_workers_env_matches_flag():
    via_env = run("search", "--bound", "20", SQUAREPAIRS_WORKERS="2")
    via_flag = run("search", "--bound", "20", "--workers", "2")
    assert via_env.returncode == via_flag.returncode == 0
    assert via_env.stdout == via_flag.stdout


def test_generate_origin_reproduces_first_pair():
    proc = run("generate", "--k", "0", "--j", "0")
    assert proc.returncode == 0
    doc = payload(proc)
    assert doc["kind"] == "generation_report"
    assert len(doc["pairs"]) == 1
    assert doc["pairs"][0]["pair"]["roots1"] == PAIR1_ROOTS1
    assert doc["pairs"][0]["pair"]["roots2"] == PAIR1_ROOTS2


def test_generate_first_ring():
    proc = run("generate", "--k", "1", "--j", "1")
    assert proc.returncode == 0
    doc = payload(proc)
    assert len(doc["lattice"]) == 9
    assert len(doc["pairs"]) == 2
    fresh = doc["pairs"][1]
    assert (fresh["k"], fresh["j"]) == (1, 1)
    assert fresh["pair"]["roots1"][0] == BIG_ROOT

    again = run("generate", "--k", "1", "--j", "1")
    assert again.stdout == proc.stdout


def test_corrupted_constant_fails_verify():
    proc = run("verify", SQUAREPAIRS_TEST_CORRUPT="a6")
    assert proc.returncode == 1
    doc = payload(proc)
    assert doc["all_pass"] is False
    assert any(not c["pass"] for c in doc["checks"])


def test_corrupted_point_aborts_generate():
    proc = run("generate", "--k", "0", "--j", "0", SQUAREPAIRS_TEST_CORRUPT="point_p")
    assert proc.returncode == 1
    assert b"self-check" in proc.stderr
    assert proc.stdout == b""

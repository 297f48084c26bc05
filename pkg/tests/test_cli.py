import json
import shlex
import subprocess
import sys

import pytest

from bracketalg import checks
from bracketalg.cli import main, render_text


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_hilbert_json(capsys):
    code, out, _ = run(["hilbert", "--algebra", "be-a", "--n", "3", "--max-deg", "5", "--json"], capsys)
    assert code == 0 and out.strip() == '{"coeffs":[1,3,4,3,1,0]}'


def test_grothendieck_top_class(capsys):
    code, out, _ = run(["groth", "--n", "3", "--perm", "3 2 1"], capsys)
    assert code == 0 and out.strip() == "x1^2*x2"
    _, oracle, _ = run(["groth", "--n", "3", "--perm", "3 2 1", "--method", "oracle"], capsys)
    assert oracle == out


def test_verify_single_check(capsys):
    code, out, _ = run(["verify", "--check", "rsm-a-relations", "--n", "2"], capsys)
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "# bracketalg verify --check rsm-a-relations --n 2"
    assert lines[1].split()[:2] == ["rsm-a-relations", "PASS"]


def test_verify_fail_exit_code(capsys):
    code, out, _ = run(["verify", "--check", "tau-square-printed", "--json"], capsys)
    rec = json.loads(out)
    assert code == 1 and rec["summary"]["failed"] == ["tau-square-printed"]


@pytest.mark.parametrize(
    "argv",
    [
        ["hilbert", "--algebra", "nope"],
        ["hilbert", "--algebra", "be-a", "--bogus"],
        ["frobnicate"],
        ["verify"],
        ["verify", "--check", "no-such-check"],
        ["groth", "--n", "3", "--perm", "1 1 2"],
        ["structure", "--n", "3", "--u", "1 2", "--v", "2 1 3"],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    capsys.readouterr()
    assert code == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["hilbert", "--algebra", "nichols-b", "--n", "2"],
        ["nichols", "--family", "A", "--n", "3"],
        ["element", "--family", "A", "--n", "3", "--index", "1"],
        ["element", "--family", "B", "--n", "2", "--index", "2", "--kind", "G", "--y", "1/2"],
        ["groth", "--n", "3", "--perm", "2 3 1"],
        ["structure", "--n", "3", "--u", "2 1 3", "--v", "1 3 2"],
        ["export", "--algebra", "be-b", "--n", "2"],
        ["verify", "--check", "g2-invariants"],
    ],
)
def test_text_and_json_carry_the_same_record(argv, capsys):
    code_json, out_json, _ = run(argv + ["--json"], capsys)
    code_text, out_text, _ = run(argv, capsys)
    record = json.loads(out_json)
    assert code_json == code_text == 0
    command = "verify" if argv[0] == "verify" else argv[0]
    if command == "verify":
        # timings differ between runs; compare the rest
        for r in record["results"]:
            assert r["checkId"] in out_text and r["verdict"] in out_text
    else:
        assert render_text(record, command) == out_text.rstrip("\n")


def test_list_checks(capsys):
    code, out, _ = run(["verify", "--list"], capsys)
    assert code == 0 and len(out.splitlines()) == len(checks.REGISTRY)
    code, out, _ = run(["verify", "--list", "--json"], capsys)
    assert list(json.loads(out)["checks"]) == list(checks.REGISTRY)


def test_structure_constants_cli(capsys):
    code, out, _ = run(["structure", "--n", "3", "--u", "2 1 3", "--v", "1 3 2", "--json"], capsys)
    rec = json.loads(out)
    assert code == 0
    assert rec["constants"] == {"2 3 1": 1, "3 1 2": 1, "3 2 1": 1}


def test_invocation_line_reproduces_run(capsys):
    _, first, _ = run(["verify", "--check", "tau-relations", "--seed", "3"], capsys)
    argv = shlex.split(first.splitlines()[0].lstrip("# "))[1:]
    _, second, _ = run(argv, capsys)
    strip = lambda text: [" ".join(l.split()[:2]) for l in text.splitlines()[:-1]]
    assert strip(first) == strip(second)


def test_profile_from_environment(monkeypatch, capsys):
    monkeypatch.setenv("BRACKETALG_PROFILE", "full")
    code, out, _ = run(["verify", "--check", "yd-braiding", "--json"], capsys)
    assert code == 0 and json.loads(out)["profile"] == "full"


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "bracketalg", "hilbert", "--algebra", "be-b", "--n", "2", "--max-deg", "3", "--json"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["coeffs"] == [1, 4, 8, 12]


def test_verify_all_quick_exercises_every_check(capsys):
    code, out, _ = run(["verify", "--all", "--profile", "quick", "--json"], capsys)
    rec = json.loads(out)
    assert [r["checkId"] for r in rec["results"]] == list(checks.REGISTRY)
    by_kind = {r["checkId"]: (r["kind"], r["verdict"]) for r in rec["results"]}
    for kind, verdict in by_kind.values():
        allowed = {"PASS", "VERIFIED-THROUGH-DEGREE", "FAIL"} if kind == "theorem" else {"EVIDENCE", "FAIL"}
        assert verdict in allowed
    # the documented printed-form failures make the run exit 1
    assert code == 1
    assert set(rec["summary"]["failed"]) <= set(
        [
            "yb-a-relations-general-parameters",
            "intertwining-c",
            "tau-d-composite",
            "tau-square-printed",
            "d-type-relations-printed",
            "conj-g2-bracket",
            "commutation-lemmas-printed",
        ]
    )

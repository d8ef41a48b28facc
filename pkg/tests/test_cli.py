import json
import subprocess
import sys

import pytest

from graviton import __version__
from graviton.cli import dumps, run


def call(tmp_path, command, doc=None, *flags):
    out = tmp_path / "out.json"
    argv = [command, "--out", str(out), *flags]
    if doc is not None:
        src = tmp_path / "in.json"
        src.write_text(json.dumps(doc))
        argv += ["--input", str(src)]
    code = run(argv)
    return code, (json.loads(out.read_text()) if code == 0 else None)


def test_check_nondegenerate_example(tmp_path):
    code, rep = call(tmp_path, "check-nondegenerate", {"type": "Ak", "k": 2, "coeffs": [[0, 1], [0, 0, 1]]})
    assert code == 0
    assert rep["result"]["def11"] is True and rep["result"]["def12"] is True
    assert rep["version"] == __version__ and rep["effective"]["tol"] == 1e-8
    assert rep["backend"] in ("cython", "python")


def test_gh_periods_two_points(tmp_path):
    code, rep = call(tmp_path, "gh-periods", {"points": [[0, 0, 1], [0, 0, -1]]})
    assert code == 0
    row = next(r for r in rep["result"] if r["form"] == "chi0")
    assert row["value"] == pytest.approx(6.283185307179586, rel=1e-10)


def test_zn_classify_rp2(tmp_path):
    doc = {"d": 1, "n": 2, "polygons": [{"height": 0, "radius": 1}]}
    code, rep = call(tmp_path, "zn-classify", doc)
    assert code == 0 and rep["result"]["verdicts"][0]["shape"] == "RP2"


def test_other_subcommands(tmp_path):
    assert call(tmp_path, "tangent-graviton", {"type": "Ak", "k": 1, "coeffs": [[0, 1]]})[1]["result"]["smooth"]
    param = {"root_system": {"kind": "A", "rank": 2}, "zeta_r": [1, 1, -2], "zeta_c": [2, 2, -4]}
    assert call(tmp_path, "classify-roots", param)[1]["result"]["smooth"] is False
    _, rep = call(tmp_path, "classify-roots", {"type": "Ak", "k": 1, "coeffs": [[0, 1]]})
    assert rep["result"]["source"] == "tangent_graviton"
    _, rep = call(tmp_path, "invariant-dims", None, "--d", "3", "--n", "2")
    assert rep["result"]["invariant_cohomology_dim"] == 2
    _, rep = call(tmp_path, "conic", None, "--eps1", "1", "--eps2", "1", "--delta", "1", "1")
    assert sorted(v[0] for v in rep["result"]["degenerate_fibers"]["values"]) == [-2, 2]
    assert rep["result"]["line"]["nondegenerate"]
    _, rep = call(tmp_path, "inventory", None, "--r", "4", "--weights", "1", "1")
    assert sorted(p["type"] for p in rep["result"]) == ["1/4(1,1)", "1/4(1,1)", "A3", "A3"]


def test_gh_verify_and_curvature_csv(tmp_path):
    cfg = {"points": [[0, 0, 1], [0, 0, -1]]}
    csv_path = tmp_path / "res.csv"
    code, rep = call(tmp_path, "gh-verify", cfg, "--samples", "20", "--csv", str(csv_path))
    assert code == 0
    assert max(rep["result"]["identities"].values()) < 1e-10
    assert max(rep["result"]["closedness"].values()) < 1e-5
    lines = csv_path.read_text().splitlines()
    assert len(lines) == 21 and lines[0].startswith("sample,x1,x2,x3,tau,omega1")
    code, rep = call(tmp_path, "gh-curvature", cfg, "--samples", "4", "--csv", str(csv_path))
    assert code == 0 and rep["result"]["max_abs_scalar_curvature"] < 1e-3
    assert rep["effective"] == {"seed": 0, "step": 1e-3}


def test_schema_error_points_at_field(tmp_path, capsys):
    code, _ = call(tmp_path, "check-nondegenerate", {"type": "Ak", "k": "two", "coeffs": []})
    assert code == 1
    err = json.loads(capsys.readouterr().err)
    assert err["error"] == "invalid-input" and err["field"]


def test_precondition_error(tmp_path, capsys):
    code, _ = call(tmp_path, "check-nondegenerate", {"type": "Ak", "k": 1, "coeffs": [[1, 1]]})
    assert code == 1


def test_numerical_rejection_exit_code(tmp_path, capsys):
    code, _ = call(tmp_path, "tangent-graviton", {"type": "Ak", "k": 1, "coeffs": [[0]]})
    assert code == 2
    assert json.loads(capsys.readouterr().err)["error"] == "DegenerateGermError"


def test_missing_input(tmp_path):
    assert run(["gh-periods", "--quiet"]) == 1
    assert run(["gh-periods", "--input", str(tmp_path / "nope.json")]) == 1


def test_deterministic_and_round_trip(tmp_path):
    cfg = {"points": [[0, 0, 0], [1, 0.5, 0], [0, 1, 1]]}
    a = call(tmp_path, "gh-verify", cfg, "--samples", "10", "--seed", "3")[1]
    b = call(tmp_path, "gh-verify", cfg, "--samples", "10", "--seed", "3")[1]
    assert a == b
    text = (tmp_path / "out.json").read_text()
    assert dumps(json.loads(text)) == text


def test_stdin_and_module_entry_point():
    doc = json.dumps({"r": 2, "weights": [1, 1]})
    p = subprocess.run([sys.executable, "-m", "graviton", "inventory", "--input", "-"], input=doc,
                       capture_output=True, text=True, check=True)
    assert [x["type"] for x in json.loads(p.stdout)["result"]] == ["A1"] * 4

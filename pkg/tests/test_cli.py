import json

import pytest

from sl2wiggle.cli import main
from sl2wiggle.exact.laurent import LaurentPoly
from sl2wiggle.exact.tpoly import TPoly


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_certify_json(capsys):
    code, out, _ = run_cli(capsys, "certify", "--dc", "1,1,2,3", "--seed", "7", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["status"] == "Certified"
    assert data["params"] == [1, 1, 2, 3]
    assert all(data["checks"].values())
    assert len(data["h"]) == 4


def test_certify_trivial_exit_code(capsys):
    code, out, _ = run_cli(capsys, "certify", "--dc", "1,1,1,1")
    assert code == 2
    assert "TrivialWord" in out


def test_polys_commutator_trace(capsys):
    code, out, _ = run_cli(capsys, "polys", "--word", "[x,y]", "--json")
    assert code == 0
    data = json.loads(out)
    trace = TPoly.from_json(data["trace"])
    xbar = LaurentPoly.lam(1) - LaurentPoly.lam(-1)
    ybar = LaurentPoly.mu(1) - LaurentPoly.mu(-1)
    t, one = TPoly.t(), TPoly.one()
    assert trace == TPoly.const(xbar * xbar * ybar * ybar) * t * (t + one) + one * 2


def test_json_determinism(capsys):
    _, out1, _ = run_cli(capsys, "certify", "--dc", "2,1,1,3", "--seed", "5", "--json")
    _, out2, _ = run_cli(capsys, "certify", "--dc", "2,1,1,3", "--seed", "5", "--json")
    assert out1 == out2


def test_parse_error_exit_code(capsys):
    code, _, err = run_cli(capsys, "polys", "--word", "x^")
    assert code == 3
    assert "position" in err


def test_bad_dc_exit_code(capsys):
    code, _, err = run_cli(capsys, "certify", "--dc", "1,2,3")
    assert code == 3


def test_verify_ok(capsys):
    code, out, _ = run_cli(capsys, "verify", "--word", "x^2 y^-1 x y", "--json")
    assert code == 0
    assert json.loads(out)["ok"] is True


def test_oracle_agreement(capsys):
    code, out, _ = run_cli(
        capsys, "oracle", "--word", "x y^-2 x^3 y", "--seed", "4", "--count", "15", "--json"
    )
    assert code == 0
    data = json.loads(out)
    assert data == {"cases": 15, "mismatches": 0}


def test_oracle_explicit_inputs(capsys):
    code, out, _ = run_cli(
        capsys,
        "oracle",
        "--word",
        "[x,y]",
        "--lambda",
        "2",
        "--mu",
        "2",
        "--g",
        "0,1,-1,1",
        "--json",
    )
    assert code == 0
    assert json.loads(out)["mismatches"] == 0


def test_witness_exact(capsys):
    code, out, _ = run_cli(
        capsys,
        "witness",
        "--dc",
        "1,1,-1,-1",
        "--lambda",
        "2",
        "--mu",
        "3",
        "--seed",
        "1",
        "--json",
    )
    assert code == 0
    data = json.loads(out)
    assert data["witness"]["exact"] is True
    assert data["witness"]["t0"] == "-49/48"


def test_grid(capsys):
    code, out, _ = run_cli(
        capsys, "certify", "--grid", "1:1,1:1,1:2,1:2", "--seed", "3", "--json"
    )
    assert code == 0
    data = json.loads(out)
    assert len(data) == 4
    statuses = {tuple(d["params"]): d["status"] for d in data}
    assert statuses[(1, 1, 1, 1)] == "TrivialWord"
    assert statuses[(1, 1, 2, 2)] in ("Certified", "SwappedCertified")


def test_word_and_dc_mutually_exclusive(capsys):
    with pytest.raises(SystemExit):
        main(["polys", "--word", "x", "--dc", "1,1,2,3"])

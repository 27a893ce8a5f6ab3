import json
import subprocess
import sys

import pytest

from ginwb import MonomialIdeal, parse_polynomials
from ginwb.cli import main
from golden import FORM_I, FORM_II, GIN_4_2
from oracles import revlex_desc

SQUARES = "x1^2;x2^2;x3^2;x4^2"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    assert code == 0, err
    return json.loads(out)


def test_gin_json(capsys, monkeypatch):
    monkeypatch.delenv("GINWB_SEED", raising=False)
    data = run_json(capsys, "gin", "--inline", SQUARES, "--trials", "3")
    assert data["n"] == 4 and data["d"] == 2
    # degree by degree, revlex-descending within a degree
    expected = [list(m) for k in range(6) for m in revlex_desc([g for g in GIN_4_2 if sum(g) == k])]
    assert data["generators"] == expected
    assert data["hilbert"] == [1, 4, 6, 4, 1]
    assert data["agreed"] is True and data["borel"] is True
    assert data["seeds"] == [42, 43, 44]


def test_gin_output_is_reproducible(capsys, monkeypatch):
    monkeypatch.delenv("GINWB_SEED", raising=False)
    args = ("gin", "--inline", "x1^2 + x2 x3; x2^2 - 2 x1 x3; x3^2 + x1 x2", "--format", "json")
    first = run(capsys, *args)
    second = run(capsys, *args)
    assert first == second and first[0] == 0


def test_json_round_trips(capsys, monkeypatch):
    monkeypatch.delenv("GINWB_SEED", raising=False)
    data = run_json(capsys, "gin", "--inline", SQUARES)
    J = MonomialIdeal(data["generators"])
    assert J == MonomialIdeal(GIN_4_2)
    # the text report lists the same generators in the polynomial grammar
    code, out, _ = run(capsys, "gin", "--inline", SQUARES)
    lines = [l.strip() for l in out.splitlines() if l.startswith("  ")]
    gens = parse_polynomials("\n".join(lines), n=4)
    assert MonomialIdeal([tuple(g.terms[0][0]) for g in gens]) == J


def test_seed_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("GINWB_SEED", "7")
    assert run_json(capsys, "gin", "--inline", SQUARES)["seeds"] == [7, 8, 9]
    assert run_json(capsys, "gin", "--inline", SQUARES, "--seed", "3")["seeds"] == [3, 4, 5]
    monkeypatch.setenv("GINWB_SEED", "abc")
    code, _, err = run(capsys, "gin", "--inline", SQUARES)
    assert code != 0 and "GINWB_SEED" in err


def test_input_file(capsys, tmp_path, monkeypatch):
    monkeypatch.delenv("GINWB_SEED", raising=False)
    p = tmp_path / "ideal.txt"
    p.write_text("x1^2\nx2^2\nx3^2\nx4^2\n")
    assert run_json(capsys, "gin", str(p))["generators"] == run_json(capsys, "gin", "--inline", SQUARES)["generators"]
    code, _, err = run(capsys, "gin", str(tmp_path / "missing.txt"))
    assert code == 1 and "cannot read" in err


def test_hilbert(capsys):
    data = run_json(capsys, "hilbert", "-n", "4", "-d", "3")
    assert data["hilbert"] == [1, 4, 10, 16, 19, 16, 10, 4, 1]
    assert data["oracle"] == data["hilbert"] and data["match"]
    code, out, _ = run(capsys, "hilbert", "-n", "6", "-d", "3")
    assert code == 0 and "*" in out
    assert run_json(capsys, "hilbert", "--inline", "x1^2;x2^2;x3^2")["hilbert"] == [1, 3, 3, 1, 0]


def test_reconstruct(capsys):
    data = run_json(capsys, "reconstruct", "-n", "4", "-d", "3")
    assert [c["label"] for c in data["candidates"]] == ["I", "II"]
    got = [MonomialIdeal(c["generators"]) for c in data["candidates"]]
    assert got == [MonomialIdeal(FORM_I), MonomialIdeal(FORM_II)]
    code, out, _ = run(capsys, "reconstruct", "-n", "4", "-d", "3")
    assert "(I)" in out and "(II)" in out


def test_lefschetz(capsys):
    data = run_json(capsys, "lefschetz", "--inline", SQUARES, "--gin")
    assert data["holds"] and data["element"] == "x4" and data["witness"] is None
    stuck = "x1^3; x1^2 x2; x1^2 x3; " + "; ".join(f"x1^{a} x2^{b} x3^{5 - a - b}" for a in range(6) for b in range(6 - a))
    data = run_json(capsys, "lefschetz", "--inline", stuck, "--kind", "WLP", "--element", "x3")
    assert not data["holds"] and data["witness"] == {"b": 1, "t": 2} and data["status"] == "fails"


def test_criterion(capsys, monkeypatch):
    monkeypatch.delenv("GINWB_SEED", raising=False)
    data = run_json(capsys, "criterion", "--inline", "x1^2;x2^2;x3^2")
    assert data["nonzero"] and data["delta"] != "0"
    assert data["seeds"] == [42]
    assert data["specialization"]["ok"] and data["specialization"]["ratios"] == {"1": 1, "2": 2, "3": 1}


@pytest.mark.parametrize(
    "argv,code,error",
    [
        (["gin", "--inline", "x1^2 +"], 2, "parse_error"),
        (["gin", "--inline", "x1^2; x2^2 + x1"], 2, "parse_error"),
        (["gin", "--inline", "x1^2; x1 x2; x1 x3", "--degree-bound", "4", "--complete-intersection"], 3, "not_regular_sequence"),
        (["gin", "--inline", "x1^2;x2^2;x3^2", "--trials", "4", "--coeff-bound", "2", "--seed", "0"], 4, "disagreement_across_trials"),
        (["reconstruct", "-n", "3", "-d", "2", "--inline", "x1^2; x1 x2; x1 x3"], 5, "infeasible_state"),
        (["gin"], 1, "error"),
    ],
)
def test_structured_errors(capsys, argv, code, error):
    got, out, err = run(capsys, *argv, "--format", "json")
    assert got == code and out == ""
    doc = json.loads(err)
    assert doc["error"] == error and doc["message"]


def test_parse_error_cites_position(capsys):
    code, _, err = run(capsys, "gin", "--inline", "x1^2;\nx2^2 )")
    assert code == 2 and "line 2, column 6" in err


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "ginwb", "hilbert", "-n", "2", "-d", "2", "--format", "json"],
        capture_output=True, text=True, check=True,
    )
    assert json.loads(out.stdout)["hilbert"] == [1, 2, 1]

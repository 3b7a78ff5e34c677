import json
from pathlib import Path

import pytest

from fuzzycat.cli import main

DATA = Path(__file__).resolve().parents[1] / "demos" / "data"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_validate_lattice(capsys):
    code, out, _ = run(capsys, "validate", "--kind", "lattice", DATA / "lukasiewicz5.json")
    assert code == 0 and "PASS" in out


def test_validate_broken_partition(capsys):
    code, out, _ = run(capsys, "validate", "--kind", "partition", DATA / "broken.json", "--json")
    assert code == 1
    doc = json.loads(out)
    assert not doc["passed"]
    assert {"x": "x2"} in [c.get("witness") for c in doc["checks"] if not c["passed"]]


def test_malformed_json(capsys):
    code, _, err = run(capsys, "validate", "--kind", "partition", DATA / "malformed.json")
    assert code == 2 and "line 2" in err


def test_transform_fixture(capsys):
    code, out, _ = run(capsys, "transform", "--what", "fdown", "--f", "1/2,3/4,1/4", DATA / "partition.json")
    assert (code, out.strip()) == (0, "[1/2, 1/4]")


@pytest.mark.parametrize("what", ["fdown", "lts"])
def test_transform_constant(capsys, what):
    code, out, _ = run(capsys, "transform", "--what", what, "--f", "3/4,3/4,3/4", DATA / "partition.json")
    assert (code, out.strip()) == (0, "[3/4, 3/4]")


def test_fdown_then_pretop_agree(capsys):
    _, down, _ = run(capsys, "transform", "--what", "fdown", "--f", "1/2,3/4,1/4", DATA / "partition.json")
    _, pre, _ = run(capsys, "transform", "--what", "pretop", "--f", "1/2,3/4,1/4", DATA / "partition.json")
    _, inter, _ = run(capsys, "transform", "--what", "interior", "--f", "1/2,3/4,1/4", DATA / "partition.json")
    blocks = down.strip("[]\n").split(", ")
    xi = [0, 0, 1]  # cores of the fixture
    assert pre.strip() == "[" + ", ".join(blocks[j] for j in xi) + "]" == inter.strip()


def test_transform_axis_mismatch(capsys):
    code, _, err = run(capsys, "transform", "--what", "fdown", "--f", "1/2,1", DATA / "partition.json")
    assert code == 1 and "axis mismatch" in err


def test_check_fig2(capsys):
    code, out, _ = run(capsys, "check", "--suite", "prop-fig2")
    assert code == 0 and "1/1 suites passed" in out


def test_check_budget_error(capsys):
    code, _, err = run(capsys, "check", "--suite", "prop-qua-embed-pretop", "--budget", "10", "--lattice", "luk:5")
    assert code == 2 and "budget" in err


def test_check_unknown_suite(capsys):
    code, _, err = run(capsys, "check", "--suite", "prop-nope")
    assert code == 2 and "unknown suite" in err


def test_usage_errors(capsys):
    assert run(capsys, "validate", "--kind", "nope", "x.json")[0] == 2
    assert run(capsys, "check", "--suite", "all", "--budget", "0")[0] == 2
    assert run(capsys)[0] == 2


def test_check_json_is_deterministic(capsys):
    _, a, _ = run(capsys, "check", "--suite", "prop-3-composition,prop-iso-f3", "--json", "--seed", "4")
    _, b, _ = run(capsys, "check", "--suite", "prop-iso-f3", "--suite", "prop-3-composition", "--json", "--seed", "4")
    da, db = json.loads(a), json.loads(b)
    for d in (da, db):
        d.pop("elapsed")
        for s in d["suites"].values():
            s.pop("elapsed")
    assert da == db
    assert list(da["suites"]) == ["prop-3-composition", "prop-iso-f3"]

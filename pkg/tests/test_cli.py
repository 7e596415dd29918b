import json

import pytest

from extremal_hhh.cli import FIELD_ENV, main
from extremal_hhh.homology import TriGradedTable


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze(capsys):
    code, out, _ = run(capsys, "analyze", "1 2 1 2", "--n", "3", "--json")
    assert code == 0
    rep = json.loads(out)
    assert rep["writhe"] == 4 and rep["components"] == 1
    assert rep["positive"] and rep["stst_pairs"] == {"1,2": True}


def test_analyze_mixed_signs(capsys):
    code, out, _ = run(capsys, "analyze", "1 -1", "--n", "2")
    assert code == 0 and "mixed signs" in out


def test_hhh_text_and_json(capsys):
    code, out, _ = run(capsys, "hhh", "1 2 1 2", "--n", "3")
    assert code == 0 and out.strip()
    code, out, _ = run(capsys, "hhh", "1 1", "--n", "2", "--json")
    assert code == 0
    t = TriGradedTable.from_json(json.loads(out))
    assert t.tails and t.tails[0].qstart == 2


def test_output_is_deterministic(capsys):
    outs = {run(capsys, "hhh", "1 2 2 1 2", "--n", "3", "--json")[1] for _ in range(2)}
    assert len(outs) == 1


def test_superpoly(capsys):
    code, out, _ = run(capsys, "superpoly", "1 1 1", "--n", "2")
    assert code == 0
    assert "A*T*Q^-4 + A*T^-1 + A^2*T^-1*Q^-4" in out
    code, out, _ = run(capsys, "superpoly", "1 1 1", "--n", "2", "--json")
    assert json.loads(out)["monomials"] == [[1, 1, -1, 0], [1, 1, 1, -4], [1, 2, -1, -4]]


@pytest.mark.parametrize(
    "argv",
    [
        ("hhh", "1 -2", "--n", "3"),
        ("hhh", "1 x", "--n", "3"),
        ("hhh", "3", "--n", "3"),
        ("hhh", "", "--n", "3"),
        ("hhh", "1", "--n", "2", "--qmax", "-1"),
        ("hhh", "1", "--n", "2", "--field", "4"),
        ("superpoly", "1 -1", "--n", "2"),
        ("bogus",),
    ],
)
def test_input_errors_exit_1(capsys, argv):
    assert run(capsys, *argv)[0] == 1


def test_field_from_environment(capsys, monkeypatch):
    ref = run(capsys, "hhh", "1 2 1 2", "--n", "3", "--json")[1]
    monkeypatch.setenv(FIELD_ENV, "10007")
    code, out, _ = run(capsys, "hhh", "1 2 1 2", "--n", "3", "--json")
    assert code == 0
    assert json.loads(out)["field"] != json.loads(ref)["field"]
    assert json.loads(out)["entries"] == json.loads(ref)["entries"]


def test_verify_fixtures(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "fixtures")
    assert code == 0 and out.startswith("PASS fixtures")
    code, out, _ = run(capsys, "verify", "--suite", "two-strand", "--count", "3", "--json")
    assert code == 0 and json.loads(out)["passed"]

import json

import pytest

from paraplactic import cli
from paraplactic.cli import EXIT_FAIL, EXIT_PASS, EXIT_USAGE, main
from paraplactic.combinat.plactic import PlacticSignError


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip().startswith("{") else out


def test_canon(capsys):
    code, data = run(capsys, "canon", "2,1,3", "--m", "3", "--n", "0")
    assert code == EXIT_PASS
    assert data["sign"] == 1
    assert data["shape"] == [2, 1]


def test_canon_odd_sign(capsys):
    code, data = run(capsys, "canon", "1b,2b,2b", "--m", "0", "--n", "2")
    assert code == EXIT_PASS
    assert data["sign"] == -1


def test_canon_p_restriction(capsys):
    code, data = run(capsys, "canon", "1,1", "--m", "1", "--n", "0", "--p", "1")
    assert code == EXIT_PASS
    assert data == {"zero": True}


def test_canon_fast_fallback_warns(capsys):
    with pytest.warns(UserWarning, match="Row insertion"):
        code, data = run(capsys, "canon", "1b,1b", "--m", "0", "--n", "1", "--fast")
    assert code == EXIT_PASS
    assert data["shape"] == [1, 1]


@pytest.mark.parametrize(
    "argv",
    [
        ["canon", "3", "--m", "2", "--n", "0"],
        ["canon", "1,x"],
        ["identity", "hook", "--cap", "13"],
        ["identity", "king", "--m", "1", "--n", "1", "--p", "1"],
        ["identity", "fock-p"],
        ["tableaux"],
        ["rmatrix", "--q0", "1"],
        ["rmatrix", "--q0", "two"],
        ["verify-all", "--only", "bogus"],
        ["nonsense"],
        [],
        ["identity", "unknown-name"],
    ],
)
def test_usage_errors(capsys, argv):
    assert main(argv) == EXIT_USAGE
    assert capsys.readouterr().out == ""


def test_help(capsys):
    assert main(["--help"]) == EXIT_PASS
    assert "verify-all" in capsys.readouterr().out


def test_identity(capsys):
    code, data = run(capsys, "identity", "hook", "--m", "1", "--n", "1", "--cap", "4")
    assert code == EXIT_PASS
    assert data["equal"] is True
    assert data["first_discrepancy"] is None


def test_tableaux(capsys):
    code, data = run(capsys, "tableaux", "--shape", "2,1", "--m", "1", "--n", "1")
    assert code == EXIT_PASS
    assert data["count"] == 2
    assert len(data["tableaux"]) == 2


def test_schur_and_hookschur(capsys):
    code, data = run(capsys, "schur", "--shape", "1", "--m", "2", "--n", "0", "--cap", "2")
    assert code == EXIT_PASS
    assert data["terms"] == [
        {"monomial": [0, 1], "coeff": 1},
        {"monomial": [1, 0], "coeff": 1},
    ]
    code, data = run(
        capsys, "hookschur", "--shape", "2,1", "--method", "factor", "--cap", "3"
    )
    assert code == EXIT_PASS
    assert data["terms"] == [
        {"monomial": [1, 2], "coeff": 1},
        {"monomial": [2, 1], "coeff": 1},
    ]


def test_hecke(capsys):
    code, data = run(capsys, "hecke")
    assert code == EXIT_PASS
    assert data["idempotent"]["passed"] is True
    code, data = run(capsys, "hecke", "--q-integer", "standard")
    assert code == EXIT_FAIL
    assert data["idempotent"]["checks"]["idempotent"] is False


def test_rmatrix(capsys):
    code, data = run(capsys, "rmatrix", "--m", "1", "--n", "1", "--i3")
    assert code == EXIT_PASS
    assert data["eigen_multiplicities"] == [2, 2]
    assert data["I3"]["dimensions"]["I3"] == 2


def test_fock(capsys):
    code, data = run(capsys, "fock", "--m", "1", "--n", "1", "--p", "1", "--cap", "4")
    assert code == EXIT_PASS
    assert data["graded_dimension"] == [1, 2, 2, 2, 2]
    assert sorted(data["states"]["2"]) == ["1/1b", "1b/1b"]


def test_verify_all_only(capsys):
    code, data = run(capsys, "verify-all", "--only", "hecke,exact", "--cap", "4")
    assert code == EXIT_PASS
    assert {c["group"] for c in data["checks"]} == {"exact", "hecke"}
    assert data["passed"] is True


def test_text_format(capsys):
    code, out = run(capsys, "hecke", "--format", "text")
    assert code == EXIT_PASS
    assert "q_integer: \"balanced\"" in out.splitlines()


def test_identity_in_ordinary_variables(capsys):
    code, data = run(capsys, "identity", "macdonald-p0", "--n", "2", "--cap", "4", "--series")
    assert code == EXIT_PASS
    assert (data["m"], data["n"], data["nvars"]) == (0, 2, 2)
    expected = [
        {"monomial": [0, 0], "coeff": 1},
        {"monomial": [0, 1], "coeff": -1},
        {"monomial": [1, 0], "coeff": -1},
        {"monomial": [1, 2], "coeff": 1},
        {"monomial": [2, 1], "coeff": 1},
        {"monomial": [2, 2], "coeff": -1},
    ]
    assert data["lhs"] == data["rhs"] == expected


def test_identity_even_variables_default(capsys):
    code, data = run(capsys, "identity", "king", "--m", "2", "--p", "1", "--cap", "4")
    assert code == EXIT_PASS
    assert (data["m"], data["n"]) == (2, 0)
    assert "lhs" not in data


def test_ordinary_identity_rejects_even_letters(capsys):
    assert main(["identity", "pschar", "--m", "1", "--n", "2", "--p", "1"]) == EXIT_USAGE
    assert capsys.readouterr().out == ""


def test_plactic_errors_exit_with_failure(capsys, monkeypatch):
    def broken(*_args, **_kwargs):
        msg = "1 is equivalent to its own negative"
        raise PlacticSignError(msg)

    monkeypatch.setattr(cli, "canonicalize", broken)
    assert main(["canon", "1", "--m", "1", "--n", "0"]) == EXIT_FAIL
    assert capsys.readouterr().out == ""

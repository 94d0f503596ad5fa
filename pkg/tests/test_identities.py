import pytest

from paraplactic.symfunc import (
    IDENTITIES,
    VariableSplit,
    verify_identity,
    verify_sign_transport,
)

CASES = [
    ("schur-sum", 2, 0, None),
    ("schur-sum", 3, 0, None),
    ("hook", 1, 1, None),
    ("hook", 2, 1, None),
    ("hook", 0, 2, None),
    ("pbw", 1, 1, None),
    ("pbw", 1, 2, None),
    ("fock-p", 1, 1, 1),
    ("fock-p", 2, 1, 2),
    ("king", 2, 0, 1),
    ("king", 3, 0, 2),
    ("ratio", 1, 1, 1),
    ("ratio", 2, 0, 2),
    ("macdonald-p0", 0, 2, None),
    ("macdonald-p0", 0, 3, None),
    ("pschar", 0, 2, 1),
    ("pschar", 0, 2, 2),
    ("pschar-alternant", 0, 2, 1),
    ("pschar-alternant", 0, 3, 2),
]


@pytest.mark.parametrize(("name", "m", "n", "p"), CASES)
def test_identity_holds(name, m, n, p):
    report = verify_identity(name, VariableSplit(m, n, 5), p)
    assert report.equal, report.to_json()
    assert report.first_discrepancy is None


def test_every_identity_is_covered():
    assert {case[0] for case in CASES} == set(IDENTITIES)


@pytest.mark.slow
@pytest.mark.parametrize(("name", "m", "n", "p"), CASES)
def test_identity_holds_deeper(name, m, n, p):
    assert verify_identity(name, VariableSplit(m, n, 8), p).equal


def _acceptance_cases():
    for m in range(5):
        for n in range(5 - m):
            if m + n:
                yield "hook", m, n, None
    for k in range(1, 5):
        yield "macdonald-p0", 0, k, None
        for p in range(1, 4):
            yield "king", k, 0, p
            yield "pschar", 0, k, p
            yield "pschar-alternant", 0, k, p
    for m in range(3):
        for n in range(3):
            if m + n:
                for p in range(1, 4):
                    yield "fock-p", m, n, p
                    yield "ratio", m, n, p


@pytest.mark.slow
@pytest.mark.parametrize(("name", "m", "n", "p"), list(_acceptance_cases()))
def test_identity_acceptance_ranges(name, m, n, p):
    assert verify_identity(name, VariableSplit(m, n, 8), p).equal


def test_macdonald_in_two_variables():
    report = verify_identity("macdonald-p0", VariableSplit(0, 2, 4))
    assert report.equal
    assert report.nvars == 2
    assert report.sides is not None
    lhs, rhs = report.sides
    assert lhs.terms == {
        (0, 0): 1,
        (1, 0): -1,
        (0, 1): -1,
        (2, 1): 1,
        (1, 2): 1,
        (2, 2): -1,
    }
    assert rhs == lhs


def test_p_zero_fock_character_is_trivial():
    # only the empty partition has first row <= 0
    report = verify_identity("fock-p", VariableSplit(1, 1, 4), 0)
    assert report.equal


def test_report_json():
    report = verify_identity("hook", VariableSplit(1, 1, 2))
    assert report.to_json() == {
        "identity": "hook",
        "m": 1,
        "n": 1,
        "p": None,
        "cap": 2,
        "nvars": 2,
        "equal": True,
        "first_discrepancy": None,
    }


def test_usage_errors():
    vs = VariableSplit(1, 1, 3)
    with pytest.raises(ValueError, match="Unknown identity"):
        verify_identity("nope", vs)
    with pytest.raises(ValueError, match="needs the order p"):
        verify_identity("fock-p", vs)
    with pytest.raises(ValueError, match="even variables only"):
        verify_identity("king", vs, 1)
    with pytest.raises(ValueError, match="n ordinary variables"):
        verify_identity("macdonald-p0", vs)
    with pytest.raises(ValueError, match="nonnegative"):
        verify_identity("fock-p", vs, -1)


@pytest.mark.parametrize("p", range(1, 5))
def test_sign_transport(p):
    report = verify_sign_transport(p, 12)
    assert report.passed
    assert report.checked == 18

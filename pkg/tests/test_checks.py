from fractions import Fraction

import pytest

from paraplactic.checks import CHECKS, GROUPS, register, run_checks, selected_groups
from paraplactic.config import MAX_CAP, ConfigError, RunConfig, parse_q0


def test_config_defaults():
    cfg = RunConfig()
    assert (cfg.m, cfg.n, cfg.p, cfg.cap) == (1, 1, None, 6)
    assert cfg.q0 == Fraction(2)
    assert cfg.format == "json"
    assert cfg.only is None


@pytest.mark.parametrize(
    ("kwargs", "match"),
    [
        ({"cap": MAX_CAP + 1}, "cap must lie"),
        ({"cap": -1}, "cap must lie"),
        ({"m": -1}, "nonnegative"),
        ({"p": -2}, "p must be nonnegative"),
        ({"q0": Fraction(1)}, "must not be 0"),
        ({"q0": Fraction(-1)}, "must not be 0"),
        ({"format": "xml"}, "Unknown output format"),
    ],
)
def test_config_errors(kwargs, match):
    with pytest.raises(ConfigError, match=match):
        RunConfig(**kwargs)


def test_parse_q0():
    assert parse_q0("3/2") == Fraction(3, 2)
    assert parse_q0(5) == 5
    with pytest.raises(ConfigError, match="Cannot parse"):
        parse_q0("two")
    with pytest.raises(ConfigError, match="Cannot parse"):
        parse_q0("1/0")


def test_registry_layout():
    assert tuple(CHECKS) == GROUPS
    assert all(CHECKS[group] for group in GROUPS)
    for group, checks in CHECKS.items():
        names = [check.name for check in checks]
        assert len(names) == len(set(names)), group


def test_register_rejects_unknown_group():
    with pytest.raises(ValueError, match="Unknown check group"):
        register("nope", "x")


def test_selected_groups():
    assert selected_groups(None) == list(GROUPS)
    assert selected_groups(("fock", "exact")) == ["exact", "fock"]
    with pytest.raises(ValueError, match="Unknown check group"):
        selected_groups(("exact", "bogus"))


@pytest.mark.parametrize("group", ["exact", "partitions", "hecke"])
def test_fast_groups_pass(group):
    summary = run_checks(RunConfig(cap=4, only=(group,)))
    assert summary.passed, summary.to_json()
    assert {result.group for result in summary.results} == {group}
    assert len(summary.results) == len(CHECKS[group])


@pytest.mark.slow
def test_every_group_passes():
    summary = run_checks(RunConfig(cap=5))
    failed = [r.to_json() for r in summary.results if not r.passed]
    assert not failed


def test_summary_json():
    summary = run_checks(RunConfig(cap=3, only=("hecke",)))
    data = summary.to_json()
    assert data["passed"] is True
    assert [c["name"] for c in data["checks"]] == ["idempotent", "ideal_action", "relations"]

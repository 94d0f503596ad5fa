"""Command-line front end: ``paraplactic <subcommand> [options]``.

Exit codes are 0 when every check passes, 1 when a mathematical check fails
and 2 on usage errors.
"""

import argparse
import json
import logging
import sys
from collections.abc import Sequence
from typing import Any, Callable, Optional

from paraplactic.checks import run_checks
from paraplactic.combinat.partitions import Partition
from paraplactic.combinat.plactic import (
    PlacticSignError,
    PlacticUniquenessError,
    canonicalize,
    p_restrict,
    parse_word,
)
from paraplactic.combinat.tableaux import enumerate_ssyt
from paraplactic.config import ConfigError, RunConfig, parse_q0
from paraplactic.exact.laurent import balanced_q_integer, standard_q_integer
from paraplactic.fock import FockSpec, basis_states, fock_character, graded_dimension
from paraplactic.quantum.hecke import verify_ideal_action, verify_idempotent
from paraplactic.quantum.rmatrix import (
    eigen_multiplicities,
    expected_multiplicities,
    verify_I3,
    verify_ybe_hecke,
)
from paraplactic.symfunc import IDENTITIES, VariableSplit, hook_schur, schur, verify_identity

logger = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

Outcome = tuple[int, dict[str, Any]]
Command = Callable[[argparse.Namespace, RunConfig], Outcome]


def _render(data: dict[str, Any], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(data, sort_keys=True, indent=2) + "\n"
    return "".join(
        f"{key}: {json.dumps(value, sort_keys=True)}\n" for key, value in sorted(data.items())
    )


def _status(passed: bool) -> int:
    return EXIT_PASS if passed else EXIT_FAIL


def _shape(args: argparse.Namespace) -> Partition:
    if args.shape is None:
        msg = "This command needs --shape, e.g. --shape 2,1"
        raise ConfigError(msg)
    return Partition.parse(args.shape)


def cmd_identity(args: argparse.Namespace, cfg: RunConfig) -> Outcome:
    entry = IDENTITIES[args.name]
    # an omitted --m or --n takes the value the identity is stated for
    m = 0 if args.m is None and entry.ordinary else cfg.m
    n = 0 if args.n is None and entry.even_only else cfg.n
    report = verify_identity(args.name, VariableSplit(m, n, cfg.cap), cfg.p)
    data = report.to_json()
    if args.series and report.sides is not None:
        data["lhs"], data["rhs"] = (side.to_json() for side in report.sides)
    return _status(report.equal), data


def cmd_canon(args: argparse.Namespace, cfg: RunConfig) -> Outcome:
    word = parse_word(args.word, cfg.m, cfg.n)
    form = canonicalize(word, cfg.m, cfg.n, fast=args.fast)
    if cfg.p is not None:
        form = p_restrict(form, cfg.p)
    return EXIT_PASS, form.to_json()


def cmd_tableaux(args: argparse.Namespace, cfg: RunConfig) -> Outcome:
    shape = _shape(args)
    tableaux = enumerate_ssyt(shape, cfg.m, cfg.n)
    return EXIT_PASS, {
        "shape": shape.to_json(),
        "m": cfg.m,
        "n": cfg.n,
        "count": len(tableaux),
        "tableaux": [t.to_json() for t in tableaux],
    }


def cmd_schur(args: argparse.Namespace, cfg: RunConfig) -> Outcome:
    shape = _shape(args)
    k = cfg.m + cfg.n
    series = schur(shape, k, cfg.cap)
    return EXIT_PASS, {"shape": shape.to_json(), "k": k, "cap": cfg.cap, "terms": series.to_json()}


def cmd_hookschur(args: argparse.Namespace, cfg: RunConfig) -> Outcome:
    shape = _shape(args)
    series = hook_schur(shape, VariableSplit(cfg.m, cfg.n, cfg.cap), args.method)
    return EXIT_PASS, {
        "shape": shape.to_json(),
        "m": cfg.m,
        "n": cfg.n,
        "cap": cfg.cap,
        "method": args.method,
        "terms": series.to_json(),
    }


def cmd_hecke(args: argparse.Namespace, _cfg: RunConfig) -> Outcome:
    qnum3 = standard_q_integer(3) if args.q_integer == "standard" else balanced_q_integer(3)
    idempotent = verify_idempotent(qnum3)
    action = verify_ideal_action(qnum3)
    return _status(idempotent.passed and action.passed), {
        "q_integer": args.q_integer,
        "idempotent": idempotent.to_json(),
        "ideal_action": action.to_json(),
    }


def cmd_rmatrix(args: argparse.Namespace, cfg: RunConfig) -> Outcome:
    report = verify_ybe_hecke(cfg.m, cfg.n)
    found = eigen_multiplicities(cfg.m, cfg.n, cfg.q0)
    expected = expected_multiplicities(cfg.m, cfg.n)
    data: dict[str, Any] = {
        **report.to_json(),
        "q0": str(cfg.q0),
        "eigen_multiplicities": list(found),
        "expected_multiplicities": list(expected),
    }
    passed = report.passed and found == expected
    if args.i3:
        i3 = verify_I3(cfg.m, cfg.n)
        data["I3"] = i3.to_json()
        passed = passed and i3.passed
    data["passed"] = passed
    return _status(passed), data


def cmd_fock(_args: argparse.Namespace, cfg: RunConfig) -> Outcome:
    spec = FockSpec(cfg.m, cfg.n, 1 if cfg.p is None else cfg.p, cfg.cap)
    return EXIT_PASS, {
        "m": spec.m,
        "n": spec.n,
        "p": spec.p,
        "cap": spec.cap,
        "graded_dimension": list(graded_dimension(spec)),
        "character": fock_character(spec).to_json(),
        "states": {
            str(r): [str(t) for t in basis_states(spec, r)]
            for r in range(min(spec.cap, 3) + 1)
        },
    }


def cmd_verify_all(_args: argparse.Namespace, cfg: RunConfig) -> Outcome:
    summary = run_checks(cfg)
    return _status(summary.passed), summary.to_json()


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--m", type=int, default=None, help="even letters / variables (default 1)")
    parser.add_argument("--n", type=int, default=None, help="odd letters / variables (default 1)")
    parser.add_argument("--p", type=int, default=None, help="order of the parastatistics")
    parser.add_argument("--cap", type=int, default=6, help="truncation degree (at most 12)")
    parser.add_argument("--q0", default="2", help="rational specialization of q, e.g. 3/2")
    parser.add_argument("--format", choices=("json", "text"), default="json")
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    parser.add_argument("--only", default=None, help="comma-separated check groups")
    parser.add_argument("--verbose", action="store_true", help="log progress to stderr")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    _common(common)
    parser = argparse.ArgumentParser(
        prog="paraplactic",
        description="Exact checks for super tableaux, parastatistics characters, "
        "the Hecke algebra and the super-plactic monoid.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("identity", parents=[common], help="verify a character identity")
    p.add_argument("name", choices=sorted(IDENTITIES))
    p.add_argument("--series", action="store_true", help="include both expanded sides")
    p.set_defaults(func=cmd_identity)

    p = sub.add_parser("canon", parents=[common], help="canonical form of a word")
    p.add_argument("word", help="comma-separated letters, e.g. 1,2b,2b")
    p.add_argument("--fast", action="store_true", help="use row insertion when possible")
    p.set_defaults(func=cmd_canon)

    for name, func, text in (
        ("tableaux", cmd_tableaux, "enumerate semistandard super tableaux"),
        ("schur", cmd_schur, "Schur polynomial in m+n variables"),
        ("hookschur", cmd_hookschur, "hook Schur polynomial"),
    ):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("--shape", default=None, help="partition, e.g. 2,1")
        if name == "hookschur":
            p.add_argument("--method", choices=("comb", "factor"), default="comb")
        p.set_defaults(func=func)

    p = sub.add_parser("hecke", parents=[common], help="Eulerian idempotent and ideal checks")
    p.add_argument("--q-integer", choices=("balanced", "standard"), default="balanced")
    p.set_defaults(func=cmd_hecke)

    p = sub.add_parser("rmatrix", parents=[common], help="Yang-Baxter, Hecke and eigenvalue checks")
    p.add_argument("--i3", action="store_true", help="also verify the subspace I_3(V)")
    p.set_defaults(func=cmd_rmatrix)

    p = sub.add_parser("fock", parents=[common], help="Fock space dimensions and character")
    p.set_defaults(func=cmd_fock)

    p = sub.add_parser("verify-all", parents=[common], help="run the check registry")
    p.set_defaults(func=cmd_verify_all)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    only = None
    if args.only:
        only = tuple(group.strip() for group in args.only.split(",") if group.strip())
    defaults = RunConfig()
    return RunConfig(
        m=defaults.m if args.m is None else args.m,
        n=defaults.n if args.n is None else args.n,
        p=args.p,
        cap=args.cap,
        q0=parse_q0(args.q0),
        format=args.format,
        seed=args.seed,
        only=only,
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return EXIT_PASS if err.code == 0 else EXIT_USAGE
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        cfg = config_from_args(args)
        code, data = args.func(args, cfg)
    except ValueError as err:
        # ConfigError and WordParseError included
        logger.error("%s", err)
        return EXIT_USAGE
    except (PlacticSignError, PlacticUniquenessError) as err:
        logger.error("%s", err)
        return EXIT_FAIL
    logger.info("%s finished with exit code %d", args.command, code)
    sys.stdout.write(_render(data, cfg.format))
    return code

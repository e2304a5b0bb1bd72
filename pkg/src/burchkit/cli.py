"""Command-line front end: classify, tor, hw, paper, fuzz.

JSON goes to stdout, diagnostics to stderr.  Exit codes: 0 success or
property pass, 1 property failure (counterexample in the JSON report),
2 usage, parse, or resolution error.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import math
import re
import sys

from .classify import classification_report
from .fixtures import EXAMPLES, run_example
from .fuzz import FuzzConfig, run_suite
from .homalg import tor_dim
from .hw import fractional_from_ideal, hw_report
from .problemfile import ProblemFileError, load_problem
from .rings import SemigroupRing

_DEFAULT_SEED = FuzzConfig().seed
_DEFAULT_TRIALS = FuzzConfig().trials


def _jsonable(obj):
    """Strict-JSON view: inf -> \"infinity\", sets sorted, tuples as lists."""
    if isinstance(obj, float):
        return "infinity" if math.isinf(obj) else obj
    if isinstance(obj, (set, frozenset)):
        return sorted(_jsonable(x) for x in obj)
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(x) for x in obj]
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {
            f.name: _jsonable(getattr(obj, f.name))
            for f in dataclasses.fields(obj)
        }
    return obj


def _emit(payload):
    print(json.dumps(_jsonable(payload), sort_keys=True, indent=2, allow_nan=False))


def _fail(message):
    print("error: %s" % message, file=sys.stderr)
    return 2


def _parse_span(text, what):
    m = re.fullmatch(r"(\d+)\.\.(\d+)", text)
    if m is None:
        raise ValueError("bad %s: %r (expected a..b)" % (what, text))
    a, b = int(m.group(1)), int(m.group(2))
    if a > b:
        raise ValueError("empty %s: %r" % (what, text))
    return a, b


def _cmd_classify(args):
    try:
        prob = load_problem(args.file)
        ideal = prob.get_ideal(args.ideal)
        named = (prob.get_ideal(args.wrt),) if args.wrt else ()
        report = classification_report(ideal, named=named)
        payload = _jsonable(report)
        if args.wrt_mpow_range:
            lo, hi = _parse_span(args.wrt_mpow_range, "power range")
            ring = ideal.ring
            m = ring.maximal_ideal()
            payload["wmf_wrt_mpow"] = {
                str(s): ideal.colon(ring.mpow(s)) == (m * ideal).colon(ring.mpow(s + 1))
                for s in range(lo, hi + 1)
            }
    except (ProblemFileError, ValueError, OSError) as exc:
        return _fail(exc)
    payload["ideal"] = args.ideal
    _emit(payload)
    return 0


def _cmd_tor(args):
    try:
        prob = load_problem(args.file)
        pres = prob.get_module(args.module)
        ideal = prob.get_ideal(args.ideal)
        if prob.module_ring[args.module] != prob.ideal_ring[args.ideal]:
            raise ValueError("module and ideal live in different rings")
        t0, t1 = _parse_span(args.range, "range")
        results = [tor_dim(pres, ideal, t) for t in range(t0, t1 + 1)]
    except (ProblemFileError, ValueError, OSError) as exc:
        return _fail(exc)
    _emit({"module": args.module, "ideal": args.ideal, "tor": results})
    return 0


def _cmd_hw(args):
    try:
        prob = load_problem(args.file)
        ideal = prob.get_ideal(args.ideal)
        if not isinstance(ideal.ring, SemigroupRing):
            raise ValueError("hw needs an ideal over a semigroup ring")
        wrt = None
        if args.wrt:
            other = prob.get_ideal(args.wrt)
            if other.ring != ideal.ring:
                raise ValueError("ambient mismatch")
            wrt = fractional_from_ideal(other)
        report = hw_report(fractional_from_ideal(ideal), wrt)
    except (ProblemFileError, ValueError, OSError) as exc:
        return _fail(exc)
    payload = _jsonable(report)
    payload["ideal"] = args.ideal
    _emit(payload)
    return 0


def _cmd_paper(args):
    names = [args.example] if args.example else sorted(EXAMPLES)
    try:
        tables = {name: run_example(name) for name in names}
    except ValueError as exc:
        return _fail(exc)
    payload = {"examples": {}, "pass": True}
    for name, claims in tables.items():
        ok_all = all(ok for _, ok in claims)
        payload["examples"][name] = {
            "claims": [{"claim": c, "ok": ok} for c, ok in claims],
            "pass": ok_all,
        }
        payload["pass"] = payload["pass"] and ok_all
    _emit(payload)
    return 0 if payload["pass"] else 1


def _cmd_fuzz(args):
    try:
        cfg = FuzzConfig(seed=args.seed, trials=args.trials)
        report = run_suite(args.suite, cfg)
    except ValueError as exc:
        return _fail(exc)
    _emit(report)
    return 0 if report.passed else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="burchkit",
        description="Exact Burch / weakly m-full ideal classification toolkit.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="full predicate report for one ideal")
    p.add_argument("file", help="problem file path")
    p.add_argument("ideal", help="declared ideal name")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--wrt", metavar="NAME", help="also test weak fullness with respect to this ideal")
    group.add_argument(
        "--wrt-mpow-range",
        metavar="A..B",
        help="replace the maximal-ideal-power table with powers A..B",
    )
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("tor", help="Tor dimensions of a module against R/I")
    p.add_argument("file")
    p.add_argument("module")
    p.add_argument("ideal")
    p.add_argument("--range", default="1..2", metavar="T0..T1", help="homological degrees (default 1..2)")
    p.set_defaults(fn=_cmd_tor)

    p = sub.add_parser("hw", help="torsion in I tensor Hom(I,R) over a semigroup ring")
    p.add_argument("file")
    p.add_argument("ideal")
    p.add_argument("--wrt", metavar="NAME", help="hypothesis ideal J for the report")
    p.set_defaults(fn=_cmd_hw)

    p = sub.add_parser("paper", help="run the built-in worked examples")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--all", action="store_true", help="run every example (default)")
    group.add_argument("--example", metavar="NAME", help="run one example, e.g. e4.5")
    p.set_defaults(fn=_cmd_paper)

    p = sub.add_parser("fuzz", help="run one falsification suite")
    p.add_argument("--suite", required=True, metavar="NAME")
    p.add_argument("--trials", type=int, default=_DEFAULT_TRIALS, metavar="N")
    p.add_argument("--seed", type=int, default=_DEFAULT_SEED, metavar="S")
    p.set_defaults(fn=_cmd_fuzz)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end. JSON on stdout, diagnostics on stderr.

Exit codes: 0 success / verification passed, 1 verification failed,
2 input or usage error, 3 a size limit was exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import construct, counting, lp, verify
from .core import detect_format, parse_hypergraph, parse_rational, serialize_hypergraph
from .errors import FracMatchError

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_LIMIT = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_INPUT)


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _read_input(path: str, fmt: str | None):
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return parse_hypergraph(text, fmt or detect_format(text))


def _nks(p):
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--s", required=True, help="p/q or exact decimal")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="fracmatch", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    _nks(sub.add_parser("count", help="extremal count M(s,n,k) for integer ns"))
    _nks(sub.add_parser("bounds", help="interval for M when ns is not an integer"))

    p = sub.add_parser("construct", help="extremal threshold hypergraph for a given c")
    _nks(p)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--out")
    p.add_argument("--format", choices=["plain", "json"], default="json")

    p = sub.add_parser("nu", help="fractional matching number with certificates")
    p.add_argument("--in", dest="input", required=True, help="hypergraph file, '-' for stdin")
    p.add_argument("--format", choices=["plain", "json"])

    p = sub.add_parser("check", help="decide whether a cardinality-s fractional matching exists")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--s", required=True)
    p.add_argument("--format", choices=["plain", "json"])

    p = sub.add_parser("verify", help="run a verification harness")
    p.add_argument("mode", choices=["extremal", "tightness", "random", "threshold", "bounds-check"])
    _nks(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=500)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--limit", type=int, default=verify.DEFAULT_LIMIT)
    p.add_argument("--jobs", type=int, default=1)
    return ap


def _run(args) -> tuple[dict | str, int]:
    cmd = args.command
    if cmd == "count":
        ec = counting.eval_M(args.n, args.k, parse_rational(args.s))
        return {"M": str(ec.M), "argmax_c": ec.argmax_c, "terms": [str(t) for t in ec.terms]}, EXIT_OK
    if cmd == "bounds":
        b = counting.bounds_M(args.n, args.k, parse_rational(args.s))
        return {"lower": str(b.lower), "upper": str(b.upper)}, EXIT_OK
    if cmd == "construct":
        h = construct.build_extremal(args.n, args.k, parse_rational(args.s), args.c)
        text = serialize_hypergraph(h, args.format)
        if args.out:
            Path(args.out).write_text(text if text.endswith("\n") else text + "\n")
            return {"written": args.out, "edges": len(h)}, EXIT_OK
        return text.rstrip("\n"), EXIT_OK
    if cmd == "nu":
        h = _read_input(args.input, args.format)
        return lp.lp_result_to_json(lp.matching_number(h)), EXIT_OK
    if cmd == "check":
        h = _read_input(args.input, args.format)
        return lp.decision_to_json(lp.has_matching(h, parse_rational(args.s))), EXIT_OK

    s = parse_rational(args.s)
    n, k = args.n, args.k
    if args.mode == "extremal":
        rep = verify.verify_extremal(n, k, s, jobs=args.jobs)
    elif args.mode == "tightness":
        rep = verify.exhaustive_tightness(n, k, s, args.limit, jobs=args.jobs)
    elif args.mode == "random":
        rep = verify.randomized_tightness(n, k, s, args.samples, args.seed, jobs=args.jobs)
    elif args.mode == "threshold":
        rep = verify.threshold_search(n, k, s, args.trials, args.seed)
    else:
        rep = verify.cross_check_bounds(n, k, s)
    return rep.to_json(), EXIT_OK if rep.passed else EXIT_FAIL


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out, code = _run(args)
    except FracMatchError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print(out if isinstance(out, str) else _dump(out))
    return code


def main() -> None:
    try:
        code = run()
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else EXIT_INPUT
    sys.exit(code)


if __name__ == "__main__":
    main()

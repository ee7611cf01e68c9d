"""Command-line front end.

    subres sres   --f "[0,-1,1]" --g "[6,-5,1]" --d 1
    subres sres   --f "[0,-1,1]" --g "[6,-5,1]" --chain
    subres sylv   --roots-a "[0,1]" --roots-b "[2,3]" --p 0 --q 1 [--raw]
    subres verify --trials 5 --max-deg 4 --seed 42 [--json]

Coefficients are given in ascending order (index = power of x) and each
entry is an integer or an "n/d" string.  Exit codes: 0 success,
1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from subres.algebra import Poly, RootList
from subres.linalg import build_sylvester_block
from subres.subresultants import double_sum, sres_chain, sres_def, sres_sylvester
from subres.verify import DEFAULT_ROOT_BOUND, run_trials

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _compact(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _load_json_arg(flag: str, text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise UsageError(f"{flag}: invalid JSON ({e.msg})") from None


def _read_input(path: str, keys: tuple[str, str]) -> tuple:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as e:
        raise UsageError(f"--input: {e.strerror}: {path}") from None
    except json.JSONDecodeError as e:
        raise UsageError(f"--input: invalid JSON ({e.msg})") from None
    if not isinstance(doc, dict) or any(k not in doc for k in keys):
        raise UsageError(f"--input: expected an object with keys {' and '.join(map(repr, keys))}")
    return tuple(doc[k] for k in keys)


def _pair(args, inline: tuple[str, str], keys: tuple[str, str]) -> tuple:
    """Raw JSON values for the two inputs, from --input or the inline flags."""
    a, b = (getattr(args, k) for k in inline)
    if args.input is not None:
        if a is not None or b is not None:
            raise UsageError("--input cannot be combined with inline inputs")
        return _read_input(args.input, keys)
    flags = ["--" + k.replace("_", "-") for k in inline]
    if a is None or b is None:
        raise UsageError(f"both {flags[0]} and {flags[1]} are required (or use --input)")
    return _load_json_arg(flags[0], a), _load_json_arg(flags[1], b)


def cmd_sres(args) -> tuple[int, str]:
    raw_f, raw_g = _pair(args, ("f", "g"), ("f", "g"))
    try:
        f, g = Poly.from_json(raw_f), Poly.from_json(raw_g)
    except ValueError as e:
        raise UsageError(str(e)) from None
    if not f or not g:
        raise UsageError("f and g must be nonzero")
    if f.degree < 1 and g.degree < 1:
        raise UsageError("at least one of f, g must have positive degree")
    if args.chain == (args.d is not None):
        raise UsageError("give exactly one of --d or --chain")

    if args.chain:
        chain = sres_chain(f, g)
        if args.dump_matrix:
            for d in chain:
                print(_compact(build_sylvester_block(f, g, d).to_json()), file=sys.stderr)
        view = (lambda p: p.to_json()) if args.json else str
        return EXIT_OK, _compact({str(d): view(p) for d, p in chain.items()})

    result = sres_def(f, g, args.d)
    if args.dump_matrix:
        print(_compact(build_sylvester_block(f, g, args.d).to_json()), file=sys.stderr)
    return EXIT_OK, _compact(result.to_json()) if args.json else str(result)


def cmd_sylv(args) -> tuple[int, str]:
    raw_a, raw_b = _pair(args, ("roots_a", "roots_b"), ("A", "B"))
    try:
        A, B = RootList.from_json(raw_a), RootList.from_json(raw_b)
    except ValueError as e:
        raise UsageError(str(e)) from None
    if args.raw:
        result = double_sum(A, B, args.p, args.q)
    else:
        result = sres_sylvester(A, B, args.p, args.q)
    return EXIT_OK, _compact(result.to_json()) if args.json else str(result)


def _color(text: str, ok: bool) -> str:
    if os.environ.get("SUBRES_COLOR") == "0" or not sys.stdout.isatty():
        return text
    return f"\033[{32 if ok else 31}m{text}\033[0m"


def cmd_verify(args) -> tuple[int, str]:
    if args.trials < 1:
        raise UsageError("--trials must be at least 1")
    if args.max_deg < 1:
        raise UsageError("--max-deg must be at least 1")
    if args.root_bound < 1:
        raise UsageError("--root-bound must be at least 1")
    reports = run_trials(args.trials, args.max_deg, args.seed, args.root_bound, lemma3=not args.no_lemma3)
    passed = sum(r.all_pass for r in reports)
    ok = passed == len(reports)
    summary = f"{passed}/{len(reports)} instances passed"
    if args.json:
        doc = {"summary": summary, "passed": passed, "trials": len(reports), "all_pass": ok,
               "reports": [r.to_json() for r in reports]}
        out = json.dumps(doc, indent=2)
    else:
        lines = []
        for r in reports:
            for c in r.failures:
                lines.append(f"FAIL seed={r.instance.seed} m={r.instance.m} n={r.instance.n} "
                             f"{c.name} {_compact(c.params)}")
        lines.append(_color(summary, ok))
        out = "\n".join(lines)
    return (EXIT_OK if ok else EXIT_FAIL), out


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="subres", description="Exact subresultants and identity verification.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("sres", help="subresultant from coefficients (defining determinant)")
    p.add_argument("--f", help="ascending coefficients of f, JSON array")
    p.add_argument("--g", help="ascending coefficients of g, JSON array")
    p.add_argument("--input", help='JSON file {"f": [...], "g": [...]}')
    p.add_argument("--d", type=int)
    p.add_argument("--chain", action="store_true", help="every admissible d")
    p.add_argument("--dump-matrix", action="store_true", help="write the determinant matrix to stderr")
    p.add_argument("--json", action="store_true", help="coefficient arrays instead of text")
    p.set_defaults(run=cmd_sres)

    p = sub.add_parser("sylv", help="subresultant from roots (Sylvester double sum)")
    p.add_argument("--roots-a", help="roots of f, JSON array")
    p.add_argument("--roots-b", help="roots of g, JSON array")
    p.add_argument("--input", help='JSON file {"A": [...], "B": [...]}')
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--raw", action="store_true", help="unscaled double sum")
    p.add_argument("--json", action="store_true")
    p.set_defaults(run=cmd_sylv)

    p = sub.add_parser("verify", help="cross-check all identities on seeded instances")
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--max-deg", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--root-bound", type=int, default=DEFAULT_ROOT_BOUND)
    p.add_argument("--no-lemma3", action="store_true", help="skip the block-partition determinants")
    p.add_argument("--json", action="store_true")
    p.set_defaults(run=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        code, out = args.run(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as e:
        # InadmissibleDegree, duplicate roots, out-of-range p/q
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())

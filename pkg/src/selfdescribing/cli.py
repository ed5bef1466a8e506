"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 parse error,
3 domain violation, 4 resource cap exceeded.
"""

import argparse
import csv
import json
import os
import sys

from . import bijections as bj
from . import combinatorics as cb
from . import dynamics as dy
from . import family as fm
from . import sequences as sq
from . import verify

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_CAP = 4


class CliError(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliError(EXIT_PARSE, message)


def _parse_seq(text):
    try:
        return sq.parse_sequence(text)
    except ValueError as exc:
        raise CliError(EXIT_PARSE, str(exc))


def _parse_range(text):
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            lo, hi = int(a), int(b)
        else:
            lo = hi = int(text)
    except ValueError:
        raise CliError(EXIT_PARSE, f"malformed range {text!r}")
    if lo < 0 or hi < lo:
        raise CliError(EXIT_PARSE, f"bad range {text!r}")
    return range(lo, hi + 1)


def _check_cap(n, args):
    if n > args.cap:
        raise CliError(EXIT_CAP, f"generation {n} exceeds cap {args.cap} (raise with --cap)")


def cmd_transform(args, out):
    s = _parse_seq(args.seq)
    out.write(sq.format_sequence(dy.Endomorphism(args.endo)(s)) + "\n")


def cmd_orbit(args, out):
    s = _parse_seq(args.seq)
    t = dy.orbit(s, args.endo, args.max_steps)
    for v in t.visited:
        out.write(sq.format_sequence(v) + "\n")
    out.write(f"steps={t.steps_to_cycle} period={t.period}\n")


def _enumeration(kind, n, m):
    if kind == "all":
        return sq.enumerate_A(n)
    if kind == "family":
        return (x.full_name for x in fm.enumerate_family(n))
    if kind == "fixed":
        return (s for s in sq.enumerate_A(n) if sq.delta(s) == s)
    if kind == "double":
        return (s for s in sq.enumerate_A(n) if sq.gamma(sq.gamma(s)) == s)
    if kind == "unit-increase":
        return bj.enumerate_unit_increase(n)
    return bj.enumerate_m_increase(m, n)


def cmd_enumerate(args, out):
    if args.kind == "m-increase" and args.m is None:
        raise CliError(EXIT_PARSE, "m-increase needs --m")
    _check_cap(args.n, args)
    for s in _enumeration(args.kind, args.n, args.m):
        out.write(sq.format_sequence(s) + "\n")


def _count_rows(kind, n, args):
    """Rows of the count table for generation ``n``: dicts with stable key order."""
    if kind == "catalan":
        return [{"n": n, "closed": cb.catalan(n)}]
    _check_cap(n, args)
    if kind == "fixed":
        brute, closed = dy.count_fixed_points_delta(n, cap=args.cap, workers=args.workers), cb.catalan(n + 1)
    elif kind == "double":
        return [{"n": n, "brute": dy.count_double_points_gamma(n, cap=args.cap, workers=args.workers)}]
    elif kind == "family":
        brute, closed = sum(1 for _ in fm.enumerate_family(n)), cb.catalan(n + 1)
    elif kind == "unit-increase":
        brute, closed = sum(1 for _ in bj.enumerate_unit_increase(n)), cb.catalan(n + 1)
    elif kind == "m-increase":
        brute = sum(1 for _ in bj.enumerate_m_increase(args.m, n))
        closed = cb.fuss_catalan(args.m, n + 1)
    elif kind == "name-dist":
        d = fm.name_distribution(n)
        return [{"n": n, "r": r, "brute": d.counts[r], "closed": cb.name_distribution_closed(n, r),
                 "match": d.counts[r] == cb.name_distribution_closed(n, r)} for r in range(n + 1)]
    else:  # unit-dist
        ends = [0] * (n + 1)
        for a in bj.enumerate_unit_increase(n):
            ends[a[-1]] += 1
        return [{"n": n, "r": r, "brute": ends[r], "closed": cb.unit_increase_count_closed(n, r),
                 "match": ends[r] == cb.unit_increase_count_closed(n, r)} for r in range(n + 1)]
    return [{"n": n, "brute": brute, "closed": closed, "match": brute == closed}]


def cmd_count(args, out):
    if args.kind == "m-increase" and args.m is None:
        raise CliError(EXIT_PARSE, "m-increase needs --m")
    writer = None
    for n in _parse_range(args.range):
        for row in _count_rows(args.kind, n, args):
            if args.format == "json-lines":
                out.write(json.dumps(row) + "\n")
            elif args.format == "csv":
                if writer is None:
                    writer = csv.DictWriter(out, fieldnames=list(row), lineterminator="\n")
                    writer.writeheader()
                writer.writerow(row)
            else:
                index = row.get("r", row["n"])
                value = row["brute"] if "brute" in row else row["closed"]
                out.write(f"{index} {value}\n")
            out.flush()


def cmd_verify(args, out):
    failed = 0
    for res in verify.run_checks(args.level, cap=args.cap):
        status = "PASS" if res.passed else "FAIL"
        line = f"{status} {res.name} ({res.seconds:.2f}s)"
        if res.detail:
            line += f" {res.detail}"
        out.write(line + "\n")
        out.flush()
        failed += not res.passed
    out.write(f"{'FAILED' if failed else 'OK'}: {failed} failing check(s)\n")
    return EXIT_VERIFY if failed else EXIT_OK


def cmd_biject(args, out):
    m = args.m
    if args.direction == "decode":
        try:
            word, wm = bj.parse_ballot(args.input)
        except ValueError as exc:
            raise CliError(EXIT_PARSE, str(exc))
        m = m if m is not None else wm
        out.write(sq.format_sequence(bj.decode_ballot_m(word, m)) + "\n")
        return
    a = _parse_seq(args.input)
    m = 1 if m is None else m
    if args.direction == "encode":
        out.write(bj.format_ballot(bj.encode_ballot_m(a, m), m) + "\n")
    else:
        out.write(sq.format_sequence(bj.west_tree_labels(a, m)) + "\n")


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--cap", type=int, default=dy.DEFAULT_CAP,
                        help="largest generation for brute-force work (default %(default)s)")
    common.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    common.add_argument("--format", choices=["json-lines", "csv", "bfile"], default="json-lines")
    common.add_argument("--m", type=int, default=None, help="increment bound for m-increase")

    p = _Parser(prog="selfdescribing", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    t = sub.add_parser("transform", parents=[common], help="apply delta, gamma or mu")
    t.add_argument("endo", choices=["delta", "delta_fast", "gamma", "mu"])
    t.add_argument("seq")
    t.set_defaults(func=cmd_transform)

    o = sub.add_parser("orbit", parents=[common], help="iterate until a cycle closes")
    o.add_argument("endo", choices=["delta", "delta_fast", "gamma", "mu"])
    o.add_argument("seq")
    o.add_argument("--max-steps", type=int, default=None)
    o.set_defaults(func=cmd_orbit)

    e = sub.add_parser("enumerate", parents=[common], help="list sequences, one per line")
    e.add_argument("kind", choices=["all", "family", "fixed", "double", "unit-increase", "m-increase"])
    e.add_argument("n", type=int)
    e.set_defaults(func=cmd_enumerate)

    c = sub.add_parser("count", parents=[common], help="counts per generation")
    c.add_argument("kind", choices=["fixed", "double", "family", "name-dist", "unit-increase",
                                    "unit-dist", "m-increase", "catalan"])
    c.add_argument("range", help='generation or inclusive range "a..b"')
    c.set_defaults(func=cmd_count)

    v = sub.add_parser("verify", parents=[common], help="run the invariant suite")
    v.add_argument("level", choices=["quick", "full"], nargs="?", default="quick")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("biject", parents=[common], help="ballot encoding and West labels")
    b.add_argument("direction", choices=["encode", "decode", "west"])
    b.add_argument("input")
    b.set_defaults(func=cmd_biject)
    return p


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
        if args.cap < 0 or args.workers < 1 or (args.m is not None and args.m < 1):
            raise CliError(EXIT_PARSE, "--cap must be >= 0, --workers and --m >= 1")
        return args.func(args, out) or EXIT_OK
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except sq.DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (dy.CapExceeded, dy.BudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

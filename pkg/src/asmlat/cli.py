"""Command line front end.

Subcommands: enumerate, count, stats, covers, hasse, genfun, verify.
Exit codes: 0 success, 1 usage error, 2 domain error (invalid matrix or
arguments out of domain), 3 enumeration guard exceeded, 4 verification
failure.  Output is human-readable by default; --format json switches to
the documented JSON schemas.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import enumeration, io, poset
from .verify import verify as run_verify
from .core import Asm, AsmError, from_permutation
from .enumeration import TooLarge
from .stats import stat_record

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_GUARD = 3
EXIT_VERIFY = 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors -> exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="asmlat", description=__doc__.strip().splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("enumerate", help="list all matrices of one size")
    sp.add_argument("--size", type=int, required=True)
    sp.add_argument("--format", choices=["lines", "json"], default="lines")
    sp.add_argument("--guard", type=int, default=None)

    sp = sub.add_parser("count", help="how many matrices of one size")
    sp.add_argument("--size", type=int, required=True)
    sp.add_argument("--method", choices=["formula", "enumerate"], default="formula")
    sp.add_argument("--guard", type=int, default=None)

    sp = sub.add_parser("stats", help="statistics of one matrix")
    _add_matrix_args(sp)
    sp.add_argument("--format", choices=["human", "json"], default="human")

    sp = sub.add_parser("covers", help="covering neighbours of one matrix")
    _add_matrix_args(sp)
    direction = sp.add_mutually_exclusive_group()
    direction.add_argument("--up", action="store_true")
    direction.add_argument("--down", action="store_true")
    sp.add_argument("--format", choices=["human", "json"], default="human")

    sp = sub.add_parser("hasse", help="full cover graph of one size")
    sp.add_argument("--size", type=int, required=True)
    sp.add_argument("--output", choices=["dot", "json"], required=True)
    sp.add_argument("--highlight-ji", action="store_true")
    sp.add_argument("--guard", type=int, default=None)

    sp = sub.add_parser("genfun", help="generating polynomial of a statistic")
    sp.add_argument("--size", type=int, required=True)
    sp.add_argument("--stat", choices=["I", "H", "beta"], default=None)
    sp.add_argument("--bivariate", choices=["I:beta", "H:beta"], default=None)
    sp.add_argument("--over", choices=["asm", "perm"], default="asm")
    sp.add_argument("--format", choices=["human", "json"], default="human")
    sp.add_argument("--guard", type=int, default=None)

    sp = sub.add_parser("verify", help="run every structural check")
    sp.add_argument("--max", type=int, required=True, dest="n_max")
    return p


def _add_matrix_args(sp) -> None:
    src = sp.add_mutually_exclusive_group(required=True)
    src.add_argument("--matrix", help="file path, or - for stdin")
    src.add_argument("--perm", help="one-line permutation, e.g. 3412 or 3,4,1,2")


def _load_matrix(args) -> Asm:
    if args.perm is not None:
        return from_permutation(io.parse_permutation(args.perm))
    if args.matrix == "-":
        text = sys.stdin.read()
    else:
        with open(args.matrix) as fh:
            text = fh.read()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return io.matrix_from_json(text)
    return io.parse_matrix_text(text)


def _cmd_enumerate(args) -> int:
    matrices = enumeration.enumerate_asms(args.size, args.guard)
    if args.format == "json":
        print(json.dumps([a.to_json_dict() for a in matrices]))
    else:
        for a in matrices:
            print(a)
            print()
    return EXIT_OK


def _cmd_count(args) -> int:
    if args.method == "formula":
        print(enumeration.count_formula(args.size))
    else:
        print(len(enumeration.enumerate_asms(args.size, args.guard)))
    return EXIT_OK


def _cmd_stats(args) -> int:
    a = _load_matrix(args)
    rec = stat_record(a)
    if args.format == "json":
        print(json.dumps(rec.to_json_dict()))
    else:
        h = rec.weak
        print(f"I={rec.inv} I*={rec.dual_inv} N={rec.minus} H={h} beta={rec.beta}")
    return EXIT_OK


def _cmd_covers(args) -> int:
    a = _load_matrix(args)
    edges = []
    if args.up or not args.down:
        edges += poset.covers_up(a)
    if args.down or not args.up:
        edges += poset.covers_down(a)
    if args.format == "json":
        print(json.dumps([e.to_json_dict() for e in edges]))
    else:
        for e in edges:
            direction = "up" if e.lower == a else "down"
            other = e.upper if direction == "up" else e.lower
            print(f"{direction} ({e.r},{e.s}) type={e.cover_type} "
                  f"dI={e.d_inv} dN={e.d_minus} dH2={e.d_weak2}")
            print(other)
            print()
    return EXIT_OK


def _cmd_hasse(args) -> int:
    graph = enumeration.build_hasse(args.size, args.guard)
    if args.output == "dot":
        sys.stdout.write(graph.to_dot(highlight_ji=args.highlight_ji))
    else:
        print(json.dumps(graph.to_json_dict()))
    return EXIT_OK


def _cmd_genfun(args) -> int:
    if args.bivariate:
        poly = enumeration.bivariate_genfun(
            args.size, args.bivariate, over=args.over, limit_guard=args.guard
        )
    else:
        if args.stat is None:
            raise _UsageError("genfun needs --stat or --bivariate")
        poly = enumeration.genfun_stat(
            args.size, args.stat, over=args.over, limit_guard=args.guard
        )
    if args.format == "json":
        print(json.dumps(poly.to_json_dict()))
    else:
        print(poly)
    return EXIT_OK


def _cmd_verify(args) -> int:
    report = run_verify(args.n_max)
    print(report)
    return EXIT_OK if report.ok else EXIT_VERIFY


_COMMANDS = {
    "enumerate": _cmd_enumerate,
    "count": _cmd_count,
    "stats": _cmd_stats,
    "covers": _cmd_covers,
    "hasse": _cmd_hasse,
    "genfun": _cmd_genfun,
    "verify": _cmd_verify,
}


def run(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"asmlat: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except TooLarge as exc:
        print(f"asmlat: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (AsmError, OSError) as exc:
        print(f"asmlat: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()

"""Command-line interface.

Exit codes: 0 success or true verdict, 1 false verdict (invalid board,
criterion fails, no completion, no solution/witness), 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import TextIO

from queenfn import construct, enumeration, width
from queenfn.complete import PartialPlacement, complete, complete_via_queen_functions
from queenfn.compose import classify, compose, criterion, generalized_compose, witness
from queenfn.core import Arrangement, validate
from queenfn.errors import InvalidInput, LimitExceeded, NoSolutionExists, NoWitness, QueenError

EXIT_OK, EXIT_FALSE, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        raise _Usage(message)


class _Usage(Exception):
    pass


def _emit(a: Arrangement, fmt: str, out: TextIO) -> None:
    if fmt == "json":
        print(json.dumps(a.to_json()), file=out)
    elif fmt == "board":
        print(a.board(), file=out)
    else:
        print(a.to_text(), file=out)


def _read_arrangement(perm: str | None, file: str | None) -> Arrangement:
    if (perm is None) == (file is None):
        raise InvalidInput("give exactly one of --perm or --file")
    if perm is not None:
        return Arrangement.parse(perm)
    return Arrangement.parse(_read_text(file))  # type: ignore[arg-type]


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InvalidInput(f"cannot read {path}: {exc.strerror}") from None


def _parse_prefix(text: str | None) -> tuple[int, ...]:
    if not text:
        return ()
    try:
        return tuple(int(t) for t in text.replace(",", " ").split())
    except ValueError:
        raise InvalidInput(f"bad prefix {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("perm", "board", "json"), default="perm")

    p = _Parser(prog="queenfn", description="N-Queens constructions, composition and width analysis.")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    s = sub.add_parser("solve", parents=[fmt], help="construct one solution in O(n)")
    s.add_argument("n", type=int)
    s.add_argument("--queen-function", action="store_true", help="print the Queen function instead")

    s = sub.add_parser("validate", help="check an arrangement (exit 0 iff it is a solution)")
    s.add_argument("--perm")
    s.add_argument("--file", help="text or JSON file; '-' reads standard input")

    s = sub.add_parser("compose", parents=[fmt], help="compose A (x) B")
    s.add_argument("a", help="arrangement file for A (A_1 with --generalized)")
    s.add_argument("b", help="arrangement file for B")
    s.add_argument("--generalized", help="comma-separated files A_2,...,A_|B|")

    s = sub.add_parser("criterion", parents=[fmt], help="residue criterion of B (exit 0 iff it passes)")
    s.add_argument("--perm")
    s.add_argument("--file")

    s = sub.add_parser("witness", parents=[fmt], help="arrangement with complete +/- residues modulo n")
    s.add_argument("n", type=int)

    s = sub.add_parser("classify", parents=[fmt], help="Q-irreducibility of n")
    s.add_argument("n", type=int)

    s = sub.add_parser("width", parents=[fmt], help="minimum Queen-function width")
    s.add_argument("--perm")
    s.add_argument("--file")
    s.add_argument("--orbit", action="store_true", help="minimum over the 8 symmetry images")

    s = sub.add_parser("enumerate", parents=[fmt], help="all solutions (one per line)")
    s.add_argument("n", type=int)
    s.add_argument("--count-only", action="store_true")
    s.add_argument("--fundamental", action="store_true")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--prefix", help='columns of the first rows, e.g. "2 4"')

    s = sub.add_parser("check-remark15", parents=[fmt], help="minimum width over all 15-queens solutions")
    s.add_argument("--jobs", type=int, default=1)

    s = sub.add_parser("check-conjecture", parents=[fmt], help="width <= 4 in every fundamental class")
    s.add_argument("n", type=int)
    s.add_argument("--jobs", type=int, default=1)

    s = sub.add_parser("complete", parents=[fmt], help="complete a partial placement")
    s.add_argument("n", type=int)
    s.add_argument("--queens", default="", help='"r,c;r,c;..."')
    s.add_argument("--method", choices=("backtrack", "qf"), default="backtrack")
    s.add_argument("--max-width", type=int, default=4)
    return p


def _cmd_solve(args: argparse.Namespace, out: TextIO) -> int:
    if args.queen_function:
        f = construct.build_queen_function(args.n)
        if args.format == "json":
            print(json.dumps(f.to_json()), file=out)
        else:
            print(f"family {construct.dispatch(args.n).tag} width {f.width}", file=out)
            for seg in f.segments:
                print(f"[{seg.lo},{seg.hi}] odd {seg.odd_map.a}i+{seg.odd_map.b} even {seg.even_map.a}i+{seg.even_map.b} (mod {args.n + 1})", file=out)
        return EXIT_OK
    _emit(construct.solve(args.n), args.format, out)
    return EXIT_OK


def _cmd_validate(args: argparse.Namespace, out: TextIO) -> int:
    ok = validate(_read_arrangement(args.perm, args.file))
    print("valid" if ok else "invalid", file=out)
    return EXIT_OK if ok else EXIT_FALSE


def _cmd_compose(args: argparse.Namespace, out: TextIO) -> int:
    a = Arrangement.parse(_read_text(args.a))
    b = Arrangement.parse(_read_text(args.b))
    if args.generalized:
        rest = [Arrangement.parse(_read_text(f)) for f in args.generalized.split(",") if f]
        c = generalized_compose([a, *rest], b)
    else:
        c = compose(a, b)
    _emit(c, args.format, out)
    return EXIT_OK


def _cmd_criterion(args: argparse.Namespace, out: TextIO) -> int:
    rep = criterion(_read_arrangement(args.perm, args.file))
    if args.format == "json":
        print(json.dumps(rep.to_json()), file=out)
    else:
        miss_d, miss_s = rep.missing()
        print(f"n {rep.n}", file=out)
        print(f"diff residues {' '.join(map(str, rep.diff_residues))} complete={rep.diff_complete} missing={miss_d}", file=out)
        print(f"sum residues {' '.join(map(str, rep.sum_residues))} complete={rep.sum_complete} missing={miss_s}", file=out)
        print("passes" if rep.passes else "fails", file=out)
    return EXIT_OK if rep.passes else EXIT_FALSE


def _cmd_witness(args: argparse.Namespace, out: TextIO) -> int:
    _emit(witness(args.n), args.format, out)
    return EXIT_OK


def _cmd_classify(args: argparse.Namespace, out: TextIO) -> int:
    if args.n < 1:
        raise InvalidInput("n must be positive")
    c = classify(args.n)
    if args.format == "json":
        print(json.dumps(c.to_json()), file=out)
    elif c.irreducible:
        print(f"{c.n} QIrreducible {c.form.value}", file=out)  # type: ignore[union-attr]
    else:
        a, b = c.witness  # type: ignore[misc]
        print(f"{c.n} Reducible {a}x{b}", file=out)
    return EXIT_OK


def _cmd_width(args: argparse.Namespace, out: TextIO) -> int:
    a = _read_arrangement(args.perm, args.file)
    if args.orbit:
        w = width.orbit_min_width(a)
        print(json.dumps({"n": a.n, "orbit_width": w}) if args.format == "json" else w, file=out)
        return EXIT_OK
    w, f = width.min_width(a)
    if args.format == "json":
        print(json.dumps(f.to_json()), file=out)
    else:
        print(w, file=out)
    return EXIT_OK


def _cmd_enumerate(args: argparse.Namespace, out: TextIO) -> int:
    prefix = _parse_prefix(args.prefix)
    if args.jobs < 1:
        raise InvalidInput("--jobs must be at least 1")
    if args.count_only:
        print(enumeration.count_solutions(args.n, jobs=args.jobs, prefix=prefix), file=out)
        return EXIT_OK
    if args.fundamental:
        if prefix:
            raise InvalidInput("--fundamental cannot be combined with --prefix")
        classes = enumeration.fundamental_classes(args.n, jobs=args.jobs)
        if args.format == "json":
            print(json.dumps([c.to_json() for c in classes]), file=out)
        else:
            for c in classes:
                print(f"{c.representative.to_text()} orbit={c.orbit_size}", file=out)
        return EXIT_OK
    enumeration.enumerate_solutions(args.n, lambda a: _emit(a, args.format, out), prefix=prefix, jobs=args.jobs)
    return EXIT_OK


def _cmd_remark(args: argparse.Namespace, out: TextIO) -> int:
    rep = enumeration.check_remark_15(jobs=args.jobs)
    if args.format == "json":
        print(json.dumps(rep.to_json()), file=out)
    else:
        print(f"n {rep.n} visited {rep.visited} partition total {rep.partition_total}", file=out)
        for w, k in sorted(rep.histogram.items()):
            print(f"width {w}: {k}", file=out)
        print(f"minimum width {rep.min_width}: {'pass' if rep.passes else 'FAIL'}", file=out)
        for a in rep.examples:
            print(f"  e.g. {a.to_text()}", file=out)
    return EXIT_OK if rep.passes else EXIT_FALSE


def _cmd_conjecture(args: argparse.Namespace, out: TextIO) -> int:
    rep = enumeration.check_conjecture(args.n, jobs=args.jobs)
    if args.format == "json":
        print(json.dumps(rep.to_json()), file=out)
    elif not rep.applicable:
        print(f"n {rep.n}: conjecture not applicable (n-1 or n is reducible)", file=out)
    else:
        print(f"n {rep.n} classes {rep.classes}", file=out)
        for w, k in sorted(rep.histogram.items()):
            print(f"orbit width {w}: {k}", file=out)
        if rep.worst is not None:
            print(f"worst class {rep.worst.representative.to_text()} width {rep.worst_width}", file=out)
        print("pass" if rep.passes else f"FAIL ({rep.failing} classes above width 4)", file=out)
    return EXIT_FALSE if rep.passes is False else EXIT_OK


def _cmd_complete(args: argparse.Namespace, out: TextIO) -> int:
    p = PartialPlacement.parse(args.n, args.queens)
    if args.method == "qf":
        res = complete_via_queen_functions(p, args.max_width)
    else:
        res = complete(p)
    if res is None:
        msg = "no completion exists" if args.method == "backtrack" else f"none found with width <= {args.max_width}"
        print(msg, file=sys.stderr)
        return EXIT_FALSE
    _emit(res, args.format, out)
    return EXIT_OK


_COMMANDS = {
    "solve": _cmd_solve,
    "validate": _cmd_validate,
    "compose": _cmd_compose,
    "criterion": _cmd_criterion,
    "witness": _cmd_witness,
    "classify": _cmd_classify,
    "width": _cmd_width,
    "enumerate": _cmd_enumerate,
    "check-remark15": _cmd_remark,
    "check-conjecture": _cmd_conjecture,
    "complete": _cmd_complete,
}


def run(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        return _COMMANDS[args.cmd](args, out)
    except _Usage as exc:
        print(f"queenfn: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NoSolutionExists, NoWitness) as exc:
        print(f"queenfn: {exc}", file=sys.stderr)
        return EXIT_FALSE
    except (InvalidInput, LimitExceeded, QueenError) as exc:
        print(f"queenfn: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:
        return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

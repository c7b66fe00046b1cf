"""Command-line front end.

Exit codes: 0 success, 1 access error, 2 syntax error, 3 usage error.
"""

from __future__ import annotations

import argparse
import sys

from .classic import TraceStep, run, trace
from .errors import AccessError, ParseError
from .locator import LocOp, apply_op, parse_locator
from .notation import parse_program, translate
from .program import Notation
from .tree import parse_sexpr, print_sexpr

EXIT_OK = 0
EXIT_ACCESS = 1
EXIT_SYNTAX = 2
EXIT_USAGE = 3

NOTATIONS = [n.value for n in Notation]

_OPS = {
    "read": LocOp.READ,
    "r": LocOp.READ,
    "write": LocOp.WRITE,
    "w!": LocOp.WRITE,
    "suffix": LocOp.SUFFIX,
    "s": LocOp.SUFFIX,
    "prefix": LocOp.PREFIX,
    "p": LocOp.PREFIX,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def format_trace_row(row: TraceStep) -> str:
    cells = [f"{row.step}.", row.remaining_program, print_sexpr(row.current_tree)]
    if row.action == "complete":
        cells.append("complete")
    else:
        cells.append(f"{row.action} → {print_sexpr(row.result)}")
    return "\t".join(cells)


def _read_tree(text: str, stdin) -> object:
    if text == "-":
        text = stdin.read()
    return parse_sexpr(text)


def _split_words(words, flags, names, what):
    """Leading positional notation names, merged with their flag spellings."""
    leading, last = words[:-1], words[-1:]
    if not last or len(leading) not in (0, len(names)):
        raise UsageError(f"expected [{' '.join(n.upper() for n in names)}] {what}")
    given = dict(zip(names, leading))
    result = {}
    for name in names:
        flag, pos = flags.get(name), given.get(name)
        if flag and pos and flag != pos:
            raise UsageError(f"conflicting {name} values {flag!r} and {pos!r}")
        value = flag or pos
        if value is not None and value not in NOTATIONS:
            raise UsageError(f"unknown notation {value!r}; choose from {', '.join(NOTATIONS)}")
        result[name] = value
    return result, last[0]


def cmd_eval(args, out, err, stdin) -> int:
    if len(args.words) == 2 and args.words[0] in NOTATIONS:
        # no notation name is a valid program, so this is "NOTATION PROGRAM" without a tree
        raise UsageError("eval: missing TREE")
    slots, program_text = _split_words(args.words[:-1], {"notation": args.notation}, ["notation"], "PROGRAM TREE")
    program = parse_program(program_text, slots["notation"])
    tree = _read_tree(args.words[-1], stdin)
    if args.trace:
        try:
            rows = trace(program, tree)
        except AccessError as exc:
            for row in exc.partial_trace:
                print(format_trace_row(row), file=err)
            raise
        for row in rows:
            print(format_trace_row(row), file=out)
        result = rows[-1].result
    else:
        result = run(program, tree)
    print(print_sexpr(result), file=out)
    return EXIT_OK


def cmd_translate(args, out, err, stdin) -> int:
    slots, program_text = _split_words(
        args.words, {"from": args.from_, "to": args.to}, ["from", "to"], "PROGRAM"
    )
    if slots["to"] is None:
        raise UsageError("translate needs a target notation (--to or positional)")
    program = parse_program(program_text, slots["from"])
    print(translate(program, Notation(slots["to"])), file=out)
    return EXIT_OK


def cmd_loc(args, out, err, stdin) -> int:
    op = _OPS[args.op]
    if (op is LocOp.WRITE) != (args.value is not None):
        raise UsageError("a VALUE is required for write and not allowed otherwise")
    loc = parse_locator(args.locator)
    tree = _read_tree(args.tree, stdin)
    value = parse_sexpr(args.value) if args.value is not None else None
    print(print_sexpr(apply_op(op, loc, tree, value)), file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="treeaccess", description="Run and translate CAR/CDR tree access programs.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("eval", help="run an access program on a tree")
    p.add_argument("--notation", choices=NOTATIONS, help="program notation (default: inferred)")
    p.add_argument("--trace", action="store_true", help="print the step table before the result")
    p.add_argument("words", nargs="+", metavar="[NOTATION] PROGRAM TREE")
    p.set_defaults(func=cmd_eval, min_words=2)

    p = sub.add_parser("translate", help="rewrite a program in another notation")
    p.add_argument("--from", dest="from_", choices=NOTATIONS)
    p.add_argument("--to", choices=NOTATIONS)
    p.add_argument("words", nargs="+", metavar="[FROM TO] PROGRAM")
    p.set_defaults(func=cmd_translate, min_words=1)

    p = sub.add_parser("loc", help="locate a list element and read/write/suffix/prefix it")
    p.add_argument("op", choices=list(_OPS), help="operation (w! is the in-language spelling of write)")
    p.add_argument("locator", help="locator such as *5n")
    p.add_argument("tree", help="list, or - to read it from stdin")
    p.add_argument("value", nargs="?", help="new element for write")
    p.set_defaults(func=cmd_loc, min_words=0)
    return parser


def main(argv=None, out=None, err=None, stdin=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    stdin = stdin or sys.stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            parser.print_usage(err)
            return EXIT_USAGE
        if len(getattr(args, "words", ())) < args.min_words:
            raise UsageError(f"{args.command}: too few arguments")
        return args.func(args, out, err, stdin)
    except UsageError as exc:
        print(exc, file=err)
        return EXIT_USAGE
    except ParseError as exc:
        print(exc.describe(), file=err)
        return EXIT_SYNTAX
    except AccessError as exc:
        print(exc.describe(), file=err)
        return EXIT_ACCESS
    except SystemExit as exc:  # --help
        return int(exc.code or 0)


if __name__ == "__main__":
    sys.exit(main())

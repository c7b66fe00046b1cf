"""Classic ``c[ad]+r`` accessor symbols: recognition, compilation, execution."""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import AccessError, ParseError
from .program import Notation, Program, Statement
from .tree import TreeValue, car, cdr

_ACCESS_SYMBOL = re.compile(r"c[ad]+r\Z")

_APPLY = {Statement.ACCESS: car, Statement.DROP: cdr}


@dataclass(frozen=True)
class TraceStep:
    step: int
    remaining_program: str
    current_tree: TreeValue
    action: str  # "drop", "access" or "complete"
    result: TreeValue


def is_access_symbol(name: str) -> bool:
    return isinstance(name, str) and _ACCESS_SYMBOL.match(name) is not None


def compile_classic(name: str) -> Program:
    """Compile e.g. ``"cadadr"`` into drop, access, drop, access.

    The letters are read right to left, which is the order the nested
    car/cdr calls would run in.
    """
    if not is_access_symbol(name):
        raise ParseError("not an accessor symbol (expected c[ad]+r)", name, _first_bad(name))
    body = tuple(Statement(ch) for ch in reversed(name[1:-1]))
    return Program(body, Notation.CLASSIC, name)


def _first_bad(name: str) -> int:
    if not name.startswith("c"):
        return 0
    for i, ch in enumerate(name[1:-1], 1):
        if ch not in "ad":
            return i
    return len(name) - 1 if len(name) > 2 else len(name)


def run(program: Program, tree: TreeValue) -> TreeValue:
    value = tree
    for i, stmt in enumerate(program.body, 1):
        try:
            value = _APPLY[stmt](value)
        except AccessError as exc:
            raise exc.located(i, program.remaining(i - 1)) from None
    return value


def trace(program: Program, tree: TreeValue) -> list[TraceStep]:
    """Run ``program`` and record one row per statement plus a final complete row.

    If a statement fails, the raised error carries the rows completed so far
    in ``partial_trace``.
    """
    rows: list[TraceStep] = []
    value = tree
    for i, stmt in enumerate(program.body, 1):
        remaining = program.remaining(i - 1)
        try:
            result = _APPLY[stmt](value)
        except AccessError as exc:
            raise exc.located(i, remaining).with_trace(rows) from None
        rows.append(TraceStep(i, remaining, value, stmt.action, result))
        value = result
    n = len(program.body) + 1
    rows.append(TraceStep(n, program.remaining(n - 1), value, "complete", value))
    return rows

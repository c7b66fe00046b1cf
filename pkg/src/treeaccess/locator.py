"""Locators (``*Nn``) and the operations applied at a located cell.

Locating a cell is kept apart from what is done with it: ``*5n`` walks five
``next`` steps to the 6th element, and ``r``/``w!``/``s``/``p`` then read,
write, take the suffix from, or take the prefix before that element.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass

from .errors import AccessError, ErrorKind, ParseError
from .tree import NIL, Cons, TreeValue, cdr, make_list

_LOCATOR = re.compile(r"\*([0-9]*)n")


class LocOp(enum.Enum):
    READ = "r"
    WRITE = "w!"
    SUFFIX = "s"
    PREFIX = "p"


@dataclass(frozen=True)
class Locator:
    steps: int = 1

    def __post_init__(self):
        if self.steps < 0:
            raise ValueError("locator steps must be non-negative")

    def render(self, steps: int | None = None) -> str:
        return f"*{self.steps if steps is None else steps}n"


@dataclass(frozen=True)
class LocatedCell:
    target: Cons
    prefix_elements: tuple[TreeValue, ...]


def _match_locator(text: str) -> tuple[Locator, int]:
    m = _LOCATOR.match(text)
    if m is None:
        bad = 0 if not text.startswith("*") else len(text.rstrip())
        for i, ch in enumerate(text[1:], 1):
            if not ch.isdigit():
                bad = i
                break
        raise ParseError("malformed locator (expected *<count>n)", text, bad)
    digits = m.group(1)
    return Locator(int(digits) if digits else 1), m.end()


def parse_locator(text: str) -> Locator:
    loc, end = _match_locator(text)
    if text[end:].strip():
        raise ParseError("trailing text after locator", text, end)
    return loc


def parse_locator_op(text: str) -> tuple[Locator, LocOp]:
    """Split the in-language spelling, e.g. ``*5nw!``, into locator and op."""
    loc, end = _match_locator(text)
    suffix = text[end:].strip()
    try:
        return loc, LocOp(suffix)
    except ValueError:
        raise ParseError(f"unknown locator operation {suffix!r}", text, end) from None


def locate(loc: Locator, lst: TreeValue) -> LocatedCell:
    node = lst
    passed = []
    for i in range(1, loc.steps + 1):
        try:
            nxt = cdr(node)
        except AccessError as exc:
            raise exc.located(i, loc.render(loc.steps - i + 1)) from None
        passed.append(node.head)
        node = nxt
    if not isinstance(node, Cons):
        # the cell itself is missing: fail where it would have been inspected
        kind = ErrorKind.END_OF_LIST if node is NIL else ErrorKind.ATOM_ENCOUNTERED
        raise AccessError(
            kind,
            step=loc.steps + 1,
            remaining_program=loc.render(0),
            offending_subtree=node,
        )
    return LocatedCell(node, tuple(passed))


def loc_read(loc: Locator, lst: TreeValue) -> TreeValue:
    return locate(loc, lst).target.head


def loc_write(loc: Locator, lst: TreeValue, value: TreeValue) -> TreeValue:
    """Persistent update: a new list with the located element replaced.

    The cells after the located one are shared with the input.
    """
    cell = locate(loc, lst)
    return make_list(cell.prefix_elements, Cons(value, cell.target.tail))


def loc_suffix(loc: Locator, lst: TreeValue) -> TreeValue:
    return locate(loc, lst).target


def loc_prefix(loc: Locator, lst: TreeValue) -> TreeValue:
    return make_list(locate(loc, lst).prefix_elements)


_DISPATCH = {
    LocOp.READ: loc_read,
    LocOp.SUFFIX: loc_suffix,
    LocOp.PREFIX: loc_prefix,
}


def apply_op(op: LocOp, loc: Locator, lst: TreeValue, value: TreeValue | None = None) -> TreeValue:
    if op is LocOp.WRITE:
        if value is None:
            raise ValueError("write needs a value")
        return loc_write(loc, lst, value)
    if value is not None:
        raise ValueError(f"{op.name.lower()} takes no value")
    return _DISPATCH[op](loc, lst)

"""Cons-cell trees: values, reader, printer, car and cdr.

A tree value is one of

* ``int`` -- a signed integer atom,
* :class:`Symbol` -- a named atom,
* :data:`NIL` -- the empty list,
* :class:`Cons` -- a (head, tail) pair.

All of them are immutable.  Unlike Common Lisp, ``car`` and ``cdr`` of
``NIL`` raise :class:`AccessError` instead of returning ``NIL``.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Union

from .errors import AccessError, ErrorKind, ParseError

__all__ = [
    "Symbol",
    "Cons",
    "NIL",
    "TreeValue",
    "car",
    "cdr",
    "is_atom",
    "is_proper_list",
    "make_list",
    "iter_list",
    "append",
    "parse_sexpr",
    "print_sexpr",
]

_INTEGER = re.compile(r"[+-]?[0-9]+\Z")
_FORBIDDEN = frozenset("()'")


class Symbol:
    __slots__ = ("name",)

    def __init__(self, name: str) -> None:
        if not isinstance(name, str) or not name:
            raise ValueError("symbol name must be a non-empty string")
        if name[0] in "0123456789" or _INTEGER.match(name):
            raise ValueError(f"symbol name {name!r} reads as a number")
        if name == "." or any(c.isspace() or c in _FORBIDDEN for c in name):
            raise ValueError(f"illegal symbol name {name!r}")
        object.__setattr__(self, "name", name)

    def __setattr__(self, key, value):
        raise AttributeError("Symbol is immutable")

    def __eq__(self, other):
        if isinstance(other, Symbol):
            return self.name == other.name
        return NotImplemented

    def __hash__(self):
        return hash((Symbol, self.name))

    def __repr__(self):
        return f"Symbol({self.name!r})"


class _Nil:
    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "NIL"

    def __reduce__(self):
        return (_Nil, ())


NIL = _Nil()


def _check_value(value) -> None:
    if isinstance(value, (Cons, Symbol, _Nil)):
        return
    if isinstance(value, int) and not isinstance(value, bool):
        return
    raise TypeError(f"not a tree value: {value!r}")


class Cons:
    """One cons cell.

    Equality, hashing and printing walk the tail spine iteratively, so long
    lists do not hit the recursion limit; only nesting depth recurses.
    """

    __slots__ = ("head", "tail")

    def __init__(self, head: TreeValue, tail: TreeValue) -> None:
        _check_value(head)
        _check_value(tail)
        object.__setattr__(self, "head", head)
        object.__setattr__(self, "tail", tail)

    def __setattr__(self, key, value):
        raise AttributeError("Cons is immutable")

    def __eq__(self, other):
        if not isinstance(other, Cons):
            return NotImplemented
        a, b = self, other
        while isinstance(a, Cons) and isinstance(b, Cons):
            if a is b:
                return True
            if not _atom_or_tree_eq(a.head, b.head):
                return False
            a, b = a.tail, b.tail
        return _atom_or_tree_eq(a, b)

    def __hash__(self):
        h = 0x3C0
        node = self
        while isinstance(node, Cons):
            h = hash((h, node.head))
            node = node.tail
        return hash((h, node))

    def __iter__(self) -> Iterator[TreeValue]:
        return iter_list(self)

    def __repr__(self):
        return f"<Cons {print_sexpr(self)}>"


def _atom_or_tree_eq(a, b) -> bool:
    # ints must not compare equal to bools or to other numeric types
    if type(a) is not type(b):
        return False
    return a == b


TreeValue = Union[int, Symbol, _Nil, Cons]


def is_atom(value: TreeValue) -> bool:
    return isinstance(value, (int, Symbol))


def car(value: TreeValue) -> TreeValue:
    """Return the item held by a cons cell."""
    if isinstance(value, Cons):
        return value.head
    raise _access_failure(value)


def cdr(value: TreeValue) -> TreeValue:
    """Return the next-cell part of a cons cell."""
    if isinstance(value, Cons):
        return value.tail
    raise _access_failure(value)


def _access_failure(value) -> AccessError:
    if value is NIL:
        return AccessError(ErrorKind.END_OF_LIST, offending_subtree=NIL)
    _check_value(value)
    return AccessError(ErrorKind.ATOM_ENCOUNTERED, offending_subtree=value)


def make_list(items: Iterable[TreeValue], tail: TreeValue = NIL) -> TreeValue:
    result = tail
    for item in reversed(list(items)):
        result = Cons(item, result)
    return result


def iter_list(value: TreeValue) -> Iterator[TreeValue]:
    """Yield the elements along a list spine, ignoring a dotted tail."""
    while isinstance(value, Cons):
        yield value.head
        value = value.tail


def is_proper_list(value: TreeValue) -> bool:
    while isinstance(value, Cons):
        value = value.tail
    return value is NIL


def append(front: TreeValue, back: TreeValue) -> TreeValue:
    if not is_proper_list(front):
        raise ValueError("append: first argument is not a proper list")
    return make_list(iter_list(front), back)


# -- printer ---------------------------------------------------------------


def print_sexpr(value: TreeValue) -> str:
    parts: list[str] = []
    _emit(value, parts)
    return "".join(parts)


def _emit(value, out: list[str]) -> None:
    if isinstance(value, Cons):
        out.append("(")
        _emit(value.head, out)
        value = value.tail
        while isinstance(value, Cons):
            out.append(" ")
            _emit(value.head, out)
            value = value.tail
        if value is not NIL:
            out.append(" . ")
            _emit(value, out)
        out.append(")")
    elif value is NIL:
        out.append("()")
    elif isinstance(value, Symbol):
        out.append(value.name)
    else:
        _check_value(value)
        out.append(str(value))


# -- reader ----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<open>\()|(?P<close>\))|(?P<quote>')|(?P<atom>[^\s()']+))")


class _Frame:
    __slots__ = ("open_pos", "items", "state", "tail")

    def __init__(self, open_pos: int) -> None:
        self.open_pos = open_pos
        self.items: list[TreeValue] = []
        # "items" -> reading elements, "dot" -> need the tail, "tail" -> need ')'
        self.state = "items"
        self.tail: TreeValue = NIL


def _atom(token: str, text: str, pos: int) -> TreeValue:
    if _INTEGER.match(token):
        return int(token)
    try:
        return Symbol(token)
    except ValueError as exc:
        raise ParseError(str(exc), text, pos) from None


def parse_sexpr(text: str) -> TreeValue:
    """Read exactly one S-expression from ``text``.

    A single leading ``'`` is accepted and dropped so quoted examples such as
    ``'(0 (1 2 3) 4 5)`` can be pasted as they are.
    """
    stack: list[_Frame] = []
    result = None
    done = False
    pos = 0
    n = len(text)
    seen_token = False

    while True:
        m = _TOKEN.match(text, pos)
        if m is None:
            # only whitespace (or nothing) left
            end = n
            break
        start = m.start(m.lastgroup)
        pos = m.end()
        kind = m.lastgroup
        if done:
            raise ParseError("trailing text after expression", text, start)

        if kind == "quote":
            if seen_token:
                raise ParseError("quote is only allowed before the whole expression", text, start)
            seen_token = True
            continue
        seen_token = True

        if kind == "open":
            stack.append(_Frame(start))
            continue

        if kind == "close":
            if not stack:
                raise ParseError("unbalanced ')'", text, start)
            frame = stack.pop()
            if frame.state == "dot":
                raise ParseError("expected an element after '.'", text, start)
            value = make_list(frame.items, frame.tail)
        elif m.group("atom") == ".":
            frame = stack[-1] if stack else None
            if frame is None or frame.state != "items" or not frame.items:
                raise ParseError("stray '.'", text, start)
            frame.state = "dot"
            continue
        else:
            value = _atom(m.group("atom"), text, start)

        if not stack:
            result = value
            done = True
            continue
        frame = stack[-1]
        if frame.state == "items":
            frame.items.append(value)
        elif frame.state == "dot":
            frame.tail = value
            frame.state = "tail"
        else:
            raise ParseError("expected ')' after dotted tail", text, start)

    if stack:
        raise ParseError(
            f"unexpected end of input, '(' at position {stack[-1].open_pos} is not closed",
            text,
            end,
        )
    if not done:
        raise ParseError("empty input", text, end)
    return result

"""Left-to-right and star notations, and translation between all three."""

from __future__ import annotations

import re

from .classic import compile_classic
from .errors import ParseError
from .program import Notation, Program, Statement, expand, render, star_tokens

_LTR = re.compile(r"r[ad]+c\Z")


def parse_ltr(text: str) -> Program:
    """``rdadac`` -> drop, access, drop, access (letters in reading order)."""
    if not _LTR.match(text):
        raise ParseError("not a left-to-right program (expected r[ad]+c)", text, _first_bad(text))
    return Program(tuple(Statement(ch) for ch in text[1:-1]), Notation.LTR, text)


def _first_bad(text: str) -> int:
    if not text.startswith("r"):
        return 0
    for i, ch in enumerate(text[1:], 1):
        if ch not in "ad":
            return i
    return len(text)


def parse_star(text: str) -> Program:
    """``*5da`` -> five drops then an access.

    A count applies to the single letter after it.  Trailing whitespace
    (the terminating space) is allowed but not required.
    """
    return Program(expand(star_tokens(text)), Notation.STAR, text)


def translate(program: Program, target: Notation) -> str:
    return render(program.body, Notation(target))


def normalize_star(text: str) -> str:
    return translate(parse_star(text), Notation.STAR)


def detect_notation(text: str) -> Notation:
    """Guess the notation from the capstones; defaults to classic."""
    stripped = text.strip()
    if stripped.startswith("*"):
        return Notation.STAR
    if stripped.startswith("r"):
        return Notation.LTR
    return Notation.CLASSIC


def parse_program(text: str, notation: Notation | str | None = None) -> Program:
    if notation is None:
        notation = detect_notation(text)
    notation = Notation(notation)
    if notation is Notation.CLASSIC:
        return compile_classic(text)
    if notation is Notation.LTR:
        return parse_ltr(text)
    return parse_star(text)


__all__ = [
    "parse_ltr",
    "parse_star",
    "translate",
    "normalize_star",
    "detect_notation",
    "parse_program",
]

"""Executable access programs and their three textual notations."""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from itertools import groupby

from .errors import ParseError


class Statement(enum.Enum):
    ACCESS = "a"
    DROP = "d"

    @property
    def letter(self) -> str:
        return self.value

    @property
    def action(self) -> str:
        return "access" if self is Statement.ACCESS else "drop"


class Notation(enum.Enum):
    CLASSIC = "classic"  # c...r, read right to left
    LTR = "ltr"  # r...c, read left to right
    STAR = "star"  # *..., left to right with repeat counts

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class StarToken:
    statement: Statement
    count: int = 1

    def __post_init__(self):
        if self.count < 1:
            raise ValueError("repeat count must be at least 1")

    def render(self) -> str:
        if self.count == 1:
            return self.statement.letter
        return f"{self.count}{self.statement.letter}"


_STAR_TOKEN = re.compile(r"([0-9]*)([ad])")


def star_tokens(text: str) -> list[StarToken]:
    """Split star-notation text into count/letter tokens, without expanding."""
    body = text.rstrip()
    if not body.startswith("*"):
        raise ParseError("star program must start with '*'", text, 0)
    pos = 1
    tokens = []
    while pos < len(body):
        m = _STAR_TOKEN.match(body, pos)
        if m is None:
            digits = re.match(r"[0-9]*", body[pos:]).group()
            if digits and pos + len(digits) == len(body):
                raise ParseError("repeat count with no following letter", text, pos)
            raise ParseError(f"illegal character {body[pos + len(digits)]!r}", text, pos + len(digits))
        digits, letter = m.groups()
        count = int(digits) if digits else 1
        if count == 0:
            raise ParseError("repeat count must be at least 1", text, pos)
        tokens.append(StarToken(Statement(letter), count))
        pos = m.end()
    if not tokens:
        raise ParseError("empty star program", text, pos)
    return tokens


def compress(body) -> list[StarToken]:
    return [StarToken(stmt, len(list(run))) for stmt, run in groupby(body)]


def expand(tokens) -> tuple[Statement, ...]:
    return tuple(tok.statement for tok in tokens for _ in range(tok.count))


def render(body, notation: Notation) -> str:
    letters = "".join(s.letter for s in body)
    if notation is Notation.CLASSIC:
        return "c" + letters[::-1] + "r"
    if notation is Notation.LTR:
        return "r" + letters + "c"
    return "*" + "".join(tok.render() for tok in compress(body))


@dataclass(frozen=True)
class Program:
    """A non-empty sequence of statements in execution order.

    ``text`` is the source the program was read from; when omitted it is
    rendered from the body in ``notation``.
    """

    body: tuple[Statement, ...]
    notation: Notation = Notation.CLASSIC
    text: str = field(default="", compare=False)

    def __post_init__(self):
        body = tuple(self.body)
        if not body:
            raise ValueError("program body must not be empty")
        if not all(isinstance(s, Statement) for s in body):
            raise TypeError("program body must hold Statement values")
        object.__setattr__(self, "body", body)
        if not self.text:
            object.__setattr__(self, "text", render(body, self.notation))

    def __len__(self):
        return len(self.body)

    def render(self, notation: Notation | None = None) -> str:
        return render(self.body, notation or self.notation)

    def remaining(self, consumed: int) -> str:
        """Source text still to run once ``consumed`` statements have executed.

        The run capstone is gone and the complete capstone stays, so a fully
        consumed classic program reads ``"c"``.
        """
        source = self.text.strip()
        if self.notation is Notation.CLASSIC:
            inner = source[1:-1]
            return "c" + inner[: len(inner) - consumed]
        if self.notation is Notation.LTR:
            return source[1:-1][consumed:] + "c"
        left = []
        for tok in star_tokens(source):
            if consumed >= tok.count:
                consumed -= tok.count
                continue
            left.append(StarToken(tok.statement, tok.count - consumed))
            consumed = 0
        return "*" + "".join(tok.render() for tok in left)

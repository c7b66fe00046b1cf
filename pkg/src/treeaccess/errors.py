"""Error types shared by the reader, the interpreter and the locator operations.

Walking off the end of a tree is never encoded as a value inside the tree.
Every failure leaves through one of these exceptions instead.
"""

from __future__ import annotations

import enum
from typing import Any


class ErrorKind(enum.Enum):
    ATOM_ENCOUNTERED = "AtomEncountered"
    END_OF_LIST = "EndOfList"
    SYNTAX_ERROR = "SyntaxError"

    def __str__(self) -> str:
        return self.value


class AccessError(Exception):
    """A failed access, out of band from the tree domain.

    ``step`` is the 1-based index of the statement that failed and
    ``remaining_program`` the program text that was still to run when it
    failed (the failing statement included).  Both are ``None`` when the error
    comes straight from a bare ``car``/``cdr`` call.
    """

    def __init__(
        self,
        kind: ErrorKind,
        *,
        step: int | None = None,
        remaining_program: str | None = None,
        offending_subtree: Any = None,
        partial_trace: tuple = (),
    ) -> None:
        self.kind = kind
        self.step = step
        self.remaining_program = remaining_program
        self.offending_subtree = offending_subtree
        self.partial_trace = tuple(partial_trace)
        super().__init__(self.describe())

    def describe(self) -> str:
        text = str(self.kind)
        if self.step is not None:
            text += f" at step {self.step}"
        if self.remaining_program is not None:
            text += f", remaining {self.remaining_program}"
        if self.offending_subtree is not None:
            from .tree import print_sexpr

            text += f" (offending subtree: {print_sexpr(self.offending_subtree)})"
        return text

    def located(self, step: int, remaining_program: str) -> AccessError:
        """Copy of this error annotated with where in a program it happened."""
        return AccessError(
            self.kind,
            step=step,
            remaining_program=remaining_program,
            offending_subtree=self.offending_subtree,
            partial_trace=self.partial_trace,
        )

    def with_trace(self, rows) -> AccessError:
        return AccessError(
            self.kind,
            step=self.step,
            remaining_program=self.remaining_program,
            offending_subtree=self.offending_subtree,
            partial_trace=rows,
        )


class ParseError(AccessError):
    """Malformed S-expression, program or locator text."""

    def __init__(self, message: str, text: str, position: int) -> None:
        self.message = message
        self.text = text
        self.position = position
        super().__init__(ErrorKind.SYNTAX_ERROR)

    def describe(self) -> str:
        return f"SyntaxError at position {self.position}: {self.message} in {self.text!r}"

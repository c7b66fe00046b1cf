"""CAR/CDR tree access language: classic, left-to-right and star notations,
plus ``*Nn`` locators, over immutable cons-cell trees."""

from .classic import TraceStep, compile_classic, is_access_symbol, run, trace
from .errors import AccessError, ErrorKind, ParseError
from .locator import (
    LocatedCell,
    Locator,
    LocOp,
    apply_op,
    loc_prefix,
    loc_read,
    loc_suffix,
    loc_write,
    locate,
    parse_locator,
    parse_locator_op,
)
from .notation import detect_notation, normalize_star, parse_ltr, parse_program, parse_star, translate
from .program import Notation, Program, Statement, StarToken
from .tree import (
    NIL,
    Cons,
    Symbol,
    TreeValue,
    append,
    car,
    cdr,
    is_proper_list,
    iter_list,
    make_list,
    parse_sexpr,
    print_sexpr,
)

__version__ = "0.1.0"

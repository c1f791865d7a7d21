"""
Expression AST for LaTeX math.

All nodes are frozen dataclasses, so structural equality is `==` and nodes
can be shared freely between trees.
"""

from collections.abc import Callable, Iterator
from dataclasses import dataclass, fields, replace
from enum import Enum
from typing import Any

GREEK_LOWER = (
    'alpha', 'beta', 'gamma', 'delta', 'epsilon', 'varepsilon', 'zeta', 'eta', 'theta', 'vartheta',
    'iota', 'kappa', 'varkappa', 'lambda', 'mu', 'nu', 'xi', 'varpi', 'rho', 'varrho', 'sigma',
    'varsigma', 'tau', 'upsilon', 'phi', 'varphi', 'chi', 'psi', 'omega',
)  # fmt: skip
GREEK_UPPER = ('Gamma', 'Delta', 'Theta', 'Lambda', 'Xi', 'Pi', 'Sigma', 'Upsilon', 'Phi', 'Psi', 'Omega')
GREEK_NAMES = frozenset(GREEK_LOWER + GREEK_UPPER)

ACCENTS = frozenset({'hat', 'widehat', 'bar', 'overline', 'tilde', 'widetilde', 'vec', 'dot', 'ddot'})
FONTS = frozenset({'mathcal', 'mathbb', 'mathbf', 'mathrm', 'mathit', 'mathsf', 'boldsymbol'})
DELIMITER_SIZES = ('big', 'Big', 'bigg', 'Bigg')


class BinaryOperator(Enum):
    ADD = 'add'
    SUB = 'sub'
    MUL = 'mul'
    IMPLICIT_MUL = 'implicit-mul'
    DIV = 'div'
    POW = 'pow'


class ConstantKind(Enum):
    PI = 'pi'
    E = 'e'
    HBAR = 'hbar'
    H = 'h'


class BigOpKind(Enum):
    SUM = 'sum'
    PROD = 'prod'
    INTEGRAL = 'int'
    CONTOUR_INTEGRAL = 'oint'

    @property
    def is_integral(self) -> bool:
        return self in (BigOpKind.INTEGRAL, BigOpKind.CONTOUR_INTEGRAL)


class BracketKind(Enum):
    PAREN = 'paren'
    BRACKET = 'bracket'
    BRACE = 'brace'
    VERT = 'vert'
    INVISIBLE = 'invisible'


class RelOp(Enum):
    EQ = '='
    LT = '<'
    GT = '>'
    LE = '\\leq'
    GE = '\\geq'
    NE = '\\neq'
    APPROX = '\\approx'
    EQUIV = '\\equiv'


class Expr:
    """Base class of every AST node."""

    __slots__ = ()

    @property
    def tag(self) -> str:
        """Variant tag: the node class name."""
        return type(self).__name__


@dataclass(frozen=True)
class Number(Expr):
    """A decimal literal, kept exactly as written."""

    text: str

    @property
    def value(self) -> float:
        return float(self.text)


@dataclass(frozen=True)
class Symbol(Expr):
    name: str
    sub: Expr | None = None
    accent: str | None = None
    font: str | None = None


@dataclass(frozen=True)
class Greek(Expr):
    name: str
    sub: Expr | None = None
    accent: str | None = None


@dataclass(frozen=True)
class Constant(Expr):
    kind: ConstantKind


@dataclass(frozen=True)
class Neg(Expr):
    operand: Expr


@dataclass(frozen=True)
class Pos(Expr):
    operand: Expr


@dataclass(frozen=True)
class BinOp(Expr):
    op: BinaryOperator
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Fraction(Expr):
    numerator: Expr
    denominator: Expr


@dataclass(frozen=True)
class Function(Expr):
    """A named function: sin, ln, exp, sqrt, root (args: radicand, degree), log (args: x[, base])."""

    name: str
    args: tuple[Expr, ...]


@dataclass(frozen=True)
class Apply(Expr):
    """Application of an uninterpreted function atom such as `f_i(\\theta)`."""

    head: Expr
    args: tuple[Expr, ...]


@dataclass(frozen=True)
class BigOp(Expr):
    kind: BigOpKind
    bound_var: Expr | None
    lower: Expr | None
    upper: Expr | None
    body: Expr
    differential: Expr | None = None


@dataclass(frozen=True)
class Partial(Expr):
    order: int
    wrt: Expr
    operand: Expr


@dataclass(frozen=True)
class Group(Expr):
    """
    Bracketed subexpression. `size` is None for plain brackets, 'left' for
    `\\left...\\right` and one of DELIMITER_SIZES for `\\big`-style pairs.
    """

    inner: Expr
    bracket: BracketKind = BracketKind.PAREN
    size: str | None = 'left'


@dataclass(frozen=True)
class Opaque(Expr):
    """Unparsed LaTeX kept byte-exact."""

    raw: str


@dataclass(frozen=True)
class Relation(Expr):
    """`parts[0] ops[0] parts[1] ...`; `aligned[i]` marks an `&` right before `ops[i]`."""

    parts: tuple[Expr | None, ...]
    ops: tuple[RelOp, ...]
    aligned: tuple[bool, ...]


@dataclass(frozen=True)
class Row:
    """One line of a multi-line display. Not an expression node itself."""

    body: Expr | None
    lead_align: bool = False
    trailing: str = ''
    annotations: tuple[str, ...] = ()


@dataclass(frozen=True)
class Rows(Expr):
    rows: tuple[Row, ...]
    env: str | None = None


def symbol_like(e: Expr | None) -> bool:
    return isinstance(e, Symbol | Greek)


def _iter_value(value: Any) -> Iterator[Expr]:
    if isinstance(value, Expr):
        yield value
    elif isinstance(value, Row):
        if value.body is not None:
            yield value.body
    elif isinstance(value, tuple):
        for item in value:
            yield from _iter_value(item)


def _map_value(value: Any, fn: Callable[[Expr], Expr]) -> Any:
    if isinstance(value, Expr):
        return fn(value)
    if isinstance(value, Row):
        return value if value.body is None else replace(value, body=fn(value.body))
    if isinstance(value, tuple):
        return tuple(_map_value(item, fn) for item in value)
    return value


def iter_children(e: Expr) -> Iterator[Expr]:
    """Direct child expressions in field order, looking through rows and tuples."""
    for f in fields(e):
        yield from _iter_value(getattr(e, f.name))


def map_children(e: Expr, fn: Callable[[Expr], Expr]) -> Expr:
    """Rebuild `e` with `fn` applied to every direct child expression."""
    return replace(e, **{f.name: _map_value(getattr(e, f.name), fn) for f in fields(e)})


def walk(e: Expr) -> Iterator[Expr]:
    """Pre-order traversal."""
    yield e
    for child in iter_children(e):
        yield from walk(child)

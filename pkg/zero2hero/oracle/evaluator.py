"""
Real-valued evaluation of expressions.

Evaluation never raises. Expressions that have no value under an
assignment produce an `EvalResult` carrying the reason instead.
"""

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from zero2hero.expr.nodes import (
    Apply,
    BigOp,
    BigOpKind,
    BinaryOperator,
    BinOp,
    Constant,
    Expr,
    Fraction,
    Function,
    Greek,
    Group,
    Neg,
    Number,
    Opaque,
    Partial,
    Pos,
    Relation,
    Rows,
    Symbol,
    walk,
)
from zero2hero.expr.symbols import free_symbols, symbol_key
from zero2hero.oracle.assignment import Assignment
from zero2hero.oracle.constants import CONSTANT_VALUES

QUADRATURE_INTERVALS = 64
MAX_ITERATIONS = 10_000


class FailureReason(Enum):
    OPAQUE_PRESENT = 'opaque-present'
    DOMAIN_ERROR = 'domain-error'
    UNBOUND_SYMBOL = 'unbound-symbol'
    UNSUPPORTED = 'unsupported'


@dataclass(frozen=True)
class EvalResult:
    value: float | None = None
    reason: FailureReason | None = None
    detail: str = ''

    @property
    def ok(self) -> bool:
        return self.reason is None


class NotEvaluable(Exception):
    def __init__(self, reason: FailureReason, detail: str = ''):
        super().__init__(f'{reason.value}: {detail}' if detail else reason.value)
        self.reason = reason
        self.detail = detail


def _domain(detail: str) -> NotEvaluable:
    return NotEvaluable(FailureReason.DOMAIN_ERROR, detail)


def _unsupported(detail: str) -> NotEvaluable:
    return NotEvaluable(FailureReason.UNSUPPORTED, detail)


def _divide(numerator: float, denominator: float) -> float:
    if denominator == 0:
        raise _domain('division by zero')
    return numerator / denominator


def _log(x: float) -> float:
    if x <= 0:
        raise _domain('logarithm of a non-positive number')
    return math.log(x)


def _root(x: float, degree: float) -> float:
    if degree == 0:
        raise _domain('zeroth root')
    if x >= 0:
        return x ** (1 / degree)
    if float(degree).is_integer() and int(degree) % 2 == 1:
        return -((-x) ** (1 / degree))
    raise _domain('even root of a negative number')


UNARY_FUNCTIONS = {
    'sin': math.sin,
    'cos': math.cos,
    'tan': math.tan,
    'cot': lambda x: _divide(1.0, math.tan(x)),
    'sec': lambda x: _divide(1.0, math.cos(x)),
    'csc': lambda x: _divide(1.0, math.sin(x)),
    'arcsin': math.asin,
    'arccos': math.acos,
    'arctan': math.atan,
    'sinh': math.sinh,
    'cosh': math.cosh,
    'tanh': math.tanh,
    'coth': lambda x: _divide(1.0, math.tanh(x)),
    'ln': _log,
    'log': _log,
    'exp': math.exp,
    'sqrt': lambda x: _root(x, 2),
}


def _integer_bound(e: Expr | None) -> int:
    match e:
        case Number(text=text) if text.isdigit():
            return int(text)
        case Neg(operand=Number(text=text)) if text.isdigit():
            return -int(text)
        case Group(inner=inner):
            return _integer_bound(inner)
        case _:
            raise _unsupported('sum or product bounds are not integer literals')


class Evaluator:
    """Evaluates one expression tree under one assignment."""

    def __init__(self, assignment: Assignment):
        self.assignment = assignment

    def evaluate(self, e: Expr, env: dict[str, float]) -> float:
        value = self._eval(e, env)
        if not math.isfinite(value):
            raise _domain('non-finite value')
        return value

    def _eval(self, e: Expr, env: dict[str, float]) -> float:
        match e:
            case Number(text=text):
                return float(text)
            case Symbol() | Greek():
                key = symbol_key(e)
                if key in env:
                    return env[key]
                if key in self.assignment:
                    return self.assignment[key]
                raise NotEvaluable(FailureReason.UNBOUND_SYMBOL, key)
            case Constant(kind=kind):
                return CONSTANT_VALUES[kind]
            case Neg(operand=operand):
                return -self._eval(operand, env)
            case Pos(operand=operand) | Group(inner=operand):
                return self._eval(operand, env)
            case BinOp():
                return self._binary(e, env)
            case Fraction(numerator=numerator, denominator=denominator):
                return _divide(self._eval(numerator, env), self._eval(denominator, env))
            case Function():
                return self._function(e, env)
            case Apply():
                raise _unsupported('uninterpreted function')
            case BigOp(kind=BigOpKind.SUM | BigOpKind.PROD):
                return self._iterate(e, env)
            case BigOp(kind=BigOpKind.INTEGRAL):
                return self._integrate(e, env)
            case BigOp():
                raise _unsupported('contour integral')
            case Partial(wrt=wrt, operand=operand):
                if symbol_key(wrt) not in free_symbols(operand):
                    return 0.0
                raise _unsupported('derivative of a non-constant operand')
            case Opaque():
                raise NotEvaluable(FailureReason.OPAQUE_PRESENT)
            case Relation() | Rows():
                raise _unsupported('nested layout')
            case _:
                raise _unsupported(type(e).__name__)

    def _binary(self, e: BinOp, env: dict[str, float]) -> float:
        op = e.op
        if op in (BinaryOperator.MUL, BinaryOperator.IMPLICIT_MUL) and isinstance(e.left, Number):
            # Zero times anything is zero, even when the other factor has no value
            if float(e.left.text) == 0:
                return 0.0
        left = self._eval(e.left, env)
        right = self._eval(e.right, env)
        try:
            match op:
                case BinaryOperator.ADD:
                    return left + right
                case BinaryOperator.SUB:
                    return left - right
                case BinaryOperator.MUL | BinaryOperator.IMPLICIT_MUL:
                    return left * right
                case BinaryOperator.DIV:
                    return _divide(left, right)
                case BinaryOperator.POW:
                    return math.pow(left, right)
        except (ValueError, OverflowError, ZeroDivisionError) as exc:
            raise _domain(str(exc)) from exc
        raise _unsupported(op.value)

    def _function(self, e: Function, env: dict[str, float]) -> float:
        args = [self._eval(arg, env) for arg in e.args]
        try:
            match e.name, args:
                case 'root', [x, degree]:
                    return _root(x, degree)
                case 'log', [x, base]:
                    return _divide(_log(x), _log(base))
                case name, [x] if name in UNARY_FUNCTIONS:
                    return UNARY_FUNCTIONS[name](x)
        except (ValueError, OverflowError, ZeroDivisionError) as exc:
            raise _domain(f'{e.name}: {exc}') from exc
        raise _unsupported(f'function {e.name}')

    def _iterate(self, e: BigOp, env: dict[str, float]) -> float:
        if e.bound_var is None:
            raise _unsupported('sum or product without an index')
        lower, upper = _integer_bound(e.lower), _integer_bound(e.upper)
        if upper - lower + 1 > MAX_ITERATIONS:
            raise _unsupported('too many terms')
        key = symbol_key(e.bound_var)
        total = 0.0 if e.kind is BigOpKind.SUM else 1.0
        for k in range(lower, upper + 1):
            value = self._eval(e.body, {**env, key: float(k)})
            total = total + value if e.kind is BigOpKind.SUM else total * value
        return total

    def _integrate(self, e: BigOp, env: dict[str, float]) -> float:
        if e.lower is None or e.upper is None or e.differential is None:
            raise _unsupported('indefinite integral')
        lower = self._eval(e.lower, env)
        upper = self._eval(e.upper, env)
        variable = symbol_key(e.differential)
        if variable not in free_symbols(e.body):
            return (upper - lower) * self._eval(e.body, env)
        return midpoint_quadrature(lambda x: self._eval(e.body, {**env, variable: x}), lower, upper)


def midpoint_quadrature(f, lower: float, upper: float, intervals: int = QUADRATURE_INTERVALS) -> float:
    """Composite midpoint rule."""
    width = (upper - lower) / intervals
    midpoints = lower + (np.arange(intervals) + 0.5) * width
    return float(np.sum([f(float(x)) for x in midpoints]) * width)


def has_opaque(e: Expr) -> bool:
    return any(isinstance(node, Opaque) for node in walk(e))


def evaluate(e: Expr, assignment: Assignment) -> EvalResult:
    """Evaluate `e`; any unparsed text makes the whole expression non-evaluable."""
    if has_opaque(e):
        return EvalResult(reason=FailureReason.OPAQUE_PRESENT)
    try:
        return EvalResult(Evaluator(assignment).evaluate(e, {}))
    except NotEvaluable as exc:
        return EvalResult(reason=exc.reason, detail=exc.detail)
    except RecursionError:
        return EvalResult(reason=FailureReason.UNSUPPORTED, detail='expression nested too deeply')

"""
Decorations multiplied by zero in the zero-add pass.

Each template takes the fresh-symbol source and returns an expression that
stays finite under any assignment the oracle draws.
"""

from collections.abc import Callable

from zero2hero.expr.nodes import BigOp, BigOpKind, BinaryOperator, BinOp, Expr, Function, Number, Partial
from zero2hero.passes.fresh import FreshSymbolSource

Template = Callable[[FreshSymbolSource], Expr]


def contour_of_partial(fresh: FreshSymbolSource) -> Expr:
    """∮_Ω ∂θ/∂θ dθ"""
    contour = fresh.take(('Omega',))
    variable = fresh.take(('theta',))
    return BigOp(BigOpKind.CONTOUR_INTEGRAL, None, contour, None, Partial(1, variable, variable), variable)


def unit_second_derivative(fresh: FreshSymbolSource) -> Expr:
    """∫_0^1 ∂²(ν²)/∂ν² dν"""
    variable = fresh.take(('nu',))
    body = Partial(2, variable, BinOp(BinaryOperator.POW, variable, Number('2')))
    return BigOp(BigOpKind.INTEGRAL, None, Number('0'), Number('1'), body, variable)


def contour_product(fresh: FreshSymbolSource) -> Expr:
    """∮_Ω θ dθ ∮_Ω η dη"""
    contour = fresh.take(('Omega',))
    first = fresh.take(('theta',))
    second = fresh.take(('eta',))
    return BinOp(
        BinaryOperator.IMPLICIT_MUL,
        BigOp(BigOpKind.CONTOUR_INTEGRAL, None, contour, None, first, first),
        BigOp(BigOpKind.CONTOUR_INTEGRAL, None, contour, None, second, second),
    )


def log_exp_sum(fresh: FreshSymbolSource) -> Expr:
    """Σ_{ν=1}^{3} ln e^ν"""
    index = fresh.take(('nu',))
    return BigOp(BigOpKind.SUM, index, Number('1'), Number('3'), Function('ln', (Function('exp', (index,)),)))


TEMPLATES: tuple[Template, ...] = (contour_of_partial, unit_second_derivative, contour_product, log_exp_sum)

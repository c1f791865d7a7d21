"""
Passes built on algebraic identities: multiply by one, add zero.
"""

from numpy.random import Generator

from zero2hero.expr.nodes import (
    BinaryOperator,
    BinOp,
    Constant,
    ConstantKind,
    Expr,
    Fraction,
    Function,
    Number,
)
from zero2hero.expr.precedence import MULTIPLICATIVE, canonical, group
from zero2hero.passes.base import RewriteResult, TransformPass
from zero2hero.passes.fresh import FreshSymbolSource
from zero2hero.passes.templates import TEMPLATES


def prepend_factor(factor: Expr, e: Expr) -> Expr:
    """
    Multiply `factor` onto the leftmost factor of a product chain.

    `m c^{2}` becomes `F m c^{2}` rather than `F (m c^{2})`, which keeps the
    chain left-associative.
    """
    if isinstance(e, BinOp) and e.op in MULTIPLICATIVE:
        return BinOp(e.op, prepend_factor(factor, e.left), e.right)
    return BinOp(BinaryOperator.IMPLICIT_MUL, factor, e)


def planck_factor() -> Fraction:
    """2πℏ/h, which is exactly one."""
    numerator = BinOp(
        BinaryOperator.IMPLICIT_MUL,
        BinOp(BinaryOperator.IMPLICIT_MUL, Number('2'), Constant(ConstantKind.PI)),
        Constant(ConstantKind.HBAR),
    )
    return Fraction(numerator, Constant(ConstantKind.H))


class PlanckPass(TransformPass):
    id = 'planck'
    description = 'Multiply by 2πℏ/h'

    def apply(self, e: Expr, rng: Generator, fresh: FreshSymbolSource) -> RewriteResult:  # noqa: ARG002
        return RewriteResult(canonical(prepend_factor(planck_factor(), e)))


class TrigOnePass(TransformPass):
    """Multiply by sin²φ + cos²φ for a fresh φ. φ becomes a new free symbol."""

    id = 'trig-one'
    description = 'Multiply by sin² + cos² of a fresh angle'
    preferred = ('varphi',)

    def apply(self, e: Expr, rng: Generator, fresh: FreshSymbolSource) -> RewriteResult:  # noqa: ARG002
        angle = fresh.take(self.preferred)
        two = Number('2')
        one = BinOp(
            BinaryOperator.ADD,
            BinOp(BinaryOperator.POW, Function('sin', (angle,)), two),
            BinOp(BinaryOperator.POW, Function('cos', (angle,)), two),
        )
        return RewriteResult(canonical(prepend_factor(group(one), e)))


class ZeroAddPass(TransformPass):
    id = 'zero-add'
    description = 'Add zero times a decorative integral or sum'

    def apply(self, e: Expr, rng: Generator, fresh: FreshSymbolSource) -> RewriteResult:
        template = TEMPLATES[int(rng.integers(len(TEMPLATES)))]
        decoration = BinOp(BinaryOperator.MUL, Number('0'), template(fresh))
        return RewriteResult(canonical(BinOp(BinaryOperator.ADD, e, decoration)))

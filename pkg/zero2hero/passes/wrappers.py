"""
Passes that wrap a whole site in an operator evaluating to the site itself.
"""

from numpy.random import Generator

from zero2hero.expr.nodes import BigOp, BigOpKind, Expr, Function, Number, Symbol, walk
from zero2hero.expr.precedence import canonical
from zero2hero.passes.base import RewriteResult, TransformPass
from zero2hero.passes.fresh import FreshSymbolSource


class UnitSumPass(TransformPass):
    """`e` becomes a one-term sum over a fresh index."""

    id = 'unit-sum'
    description = 'Wrap in a sum whose index runs from 1 to 1'
    preferred = ('kappa',)
    kind = BigOpKind.SUM

    def apply(self, e: Expr, rng: Generator, fresh: FreshSymbolSource) -> RewriteResult:  # noqa: ARG002
        index = fresh.take(self.preferred)
        return RewriteResult(canonical(BigOp(self.kind, index, Number('1'), Number('1'), e)))


class UnitProdPass(UnitSumPass):
    id = 'unit-prod'
    description = 'Wrap in a product whose index runs from 1 to 1'
    preferred = ('xi',)
    kind = BigOpKind.PROD


class UnitIntegralPass(TransformPass):
    """`e` becomes its own integral over the unit interval in a variable it does not contain."""

    id = 'unit-integral'
    description = 'Integrate over [0, 1] in a fresh variable'
    preferred = ('tau',)

    def applicable(self, e: Expr) -> bool:
        # A bare `d` before a letter would end the integrand early on re-parse
        return not any(isinstance(node, Symbol) and node.name == 'd' for node in walk(e))

    def apply(self, e: Expr, rng: Generator, fresh: FreshSymbolSource) -> RewriteResult:  # noqa: ARG002
        variable = fresh.take(self.preferred)
        return RewriteResult(
            canonical(BigOp(BigOpKind.INTEGRAL, None, Number('0'), Number('1'), e, differential=variable))
        )


class LogExpPass(TransformPass):
    id = 'log-exp'
    description = 'Take the logarithm of the exponential'

    def apply(self, e: Expr, rng: Generator, fresh: FreshSymbolSource) -> RewriteResult:  # noqa: ARG002
        return RewriteResult(canonical(Function('ln', (Function('exp', (e,)),))))

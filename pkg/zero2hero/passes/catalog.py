"""
The shipped passes, by id.

Rejected rewrites: sqrt(x^2) (that is |x|, not x) and multiplying by
zeta(s)/zeta(s) (needs a zeta evaluator and a nonvanishing guarantee).
"""

from zero2hero.passes.base import TransformPass
from zero2hero.passes.identities import PlanckPass, TrigOnePass, ZeroAddPass
from zero2hero.passes.renaming import GreekRenamePass
from zero2hero.passes.wrappers import LogExpPass, UnitIntegralPass, UnitProdPass, UnitSumPass

PASS_CATALOG: dict[str, TransformPass] = {
    transform.id: transform
    for transform in (
        UnitSumPass(),
        UnitProdPass(),
        PlanckPass(),
        LogExpPass(),
        TrigOnePass(),
        UnitIntegralPass(),
        ZeroAddPass(),
        GreekRenamePass(),
    )
}

PASS_IDS: tuple[str, ...] = tuple(PASS_CATALOG)

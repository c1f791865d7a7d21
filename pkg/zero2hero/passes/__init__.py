"""
The pass library: value-preserving rewrites that make equations look harder.
"""

from zero2hero.passes.base import RewriteResult, SemanticsClass, TransformPass
from zero2hero.passes.catalog import PASS_CATALOG, PASS_IDS
from zero2hero.passes.fresh import FreshSymbolSource
from zero2hero.passes.plan import PassPlan, apply_plan, can_apply, map_sites, plan_passes, round_trips, sites

__all__ = [
    'PASS_CATALOG',
    'PASS_IDS',
    'FreshSymbolSource',
    'PassPlan',
    'RewriteResult',
    'SemanticsClass',
    'TransformPass',
    'apply_plan',
    'can_apply',
    'map_sites',
    'plan_passes',
    'round_trips',
    'sites',
]

"""
Per-equation pass plans and their application.

Randomness comes from numpy generators seeded by
`SeedSequence([seed, equation_index, stream, ...])`, so a plan and its
application depend only on their inputs and equations can be processed in
any order.
"""

from collections.abc import Callable, Iterator, Sequence
from dataclasses import dataclass, replace

import numpy as np

from zero2hero.expr.emitter import emit
from zero2hero.expr.nodes import Expr, Relation, Rows
from zero2hero.expr.parser import parse_math
from zero2hero.expr.precedence import canonical
from zero2hero.passes.base import SemanticsClass, TransformPass
from zero2hero.passes.catalog import PASS_CATALOG
from zero2hero.passes.fresh import FreshSymbolSource
from zero2hero.passes.renaming import renamable_symbols
from zero2hero.utils.logger import get_logger

logger = get_logger(__name__)

PLAN_STREAM = 0
APPLY_STREAM = 1


@dataclass(frozen=True)
class PassPlan:
    pass_ids: tuple[str, ...] = ()
    truncated: bool = False

    def __len__(self):
        return len(self.pass_ids)

    def __iter__(self) -> Iterator[str]:
        return iter(self.pass_ids)


def stream(seed: int, equation_index: int, *path: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([seed, equation_index, *path]))


def sites(e: Expr) -> list[Expr]:
    """The subexpressions identity passes rewrite: row bodies and relation sides."""
    match e:
        case Rows(rows=rows):
            return [site for row in rows if row.body is not None for site in sites(row.body)]
        case Relation(parts=parts):
            return [part for part in parts if part is not None]
        case _:
            return [e]


def map_sites(e: Expr, fn: Callable[[Expr], Expr]) -> Expr:
    match e:
        case Rows(rows=rows):
            return replace(
                e, rows=tuple(row if row.body is None else replace(row, body=map_sites(row.body, fn)) for row in rows)
            )
        case Relation(parts=parts):
            return replace(e, parts=tuple(None if part is None else fn(part) for part in parts))
        case _:
            return fn(e)


def can_apply(transform: TransformPass, e: Expr) -> bool:
    """A pass's own applicability test; identity passes also need a site to rewrite."""
    if transform.semantics_class is SemanticsClass.EXACT_IDENTITY and not sites(e):
        return False
    return transform.applicable(e)


def round_trips(e: Expr) -> bool:
    """Whether the emitted text of `e` parses back to the same tree."""
    outcome = parse_math(emit(e))
    return outcome.ok and outcome.expr == canonical(e)


def plan_passes(
    seed: int,
    equation_index: int,
    intensity: int,
    e: Expr,
    allowed: Sequence[str] | None = None,
) -> PassPlan:
    """
    Choose `intensity` passes for one equation.

    Passes are drawn with replacement from the allowed, applicable passes,
    never repeating the previous id. Renamings are simulated: each planned
    greek-rename uses up one renamable symbol. When no pass qualifies the
    plan is cut short and marked truncated.
    """
    catalog = PASS_CATALOG
    pool = [pass_id for pass_id in (allowed or catalog) if can_apply(catalog[pass_id], e)]
    renamable = len(renamable_symbols(e))
    rng = stream(seed, equation_index, PLAN_STREAM)

    chosen: list[str] = []
    for _ in range(intensity):
        previous = chosen[-1] if chosen else None
        candidates = [
            pass_id
            for pass_id in pool
            if pass_id != previous
            and (catalog[pass_id].semantics_class is not SemanticsClass.RENAMING or renamable > 0)
        ]
        if not candidates:
            logger.warning(
                f'Equation {equation_index}: pass plan truncated to {len(chosen)} of {intensity} passes '
                f'(allowed: {", ".join(allowed or catalog)})'
            )
            return PassPlan(tuple(chosen), truncated=True)
        pass_id = candidates[int(rng.integers(len(candidates)))]
        if catalog[pass_id].semantics_class is SemanticsClass.RENAMING:
            renamable -= 1
        chosen.append(pass_id)

    return PassPlan(tuple(chosen))


def compose_renamings(first: dict[str, str], then: dict[str, str]) -> dict[str, str]:
    """Original name to final name after applying `first` and then `then`."""
    composed = {old: then.get(new, new) for old, new in first.items()}
    targets = set(first.values())
    for old, new in then.items():
        if old not in targets:
            composed.setdefault(old, new)
    return composed


def apply_plan(e: Expr, plan: PassPlan | Sequence[str], seed: int, equation_index: int) -> tuple[Expr, dict[str, str]]:
    """
    Apply a plan left to right.

    Identity passes rewrite every site, sharing one generator per step;
    renaming passes rewrite the whole equation. A step whose result would not
    parse back from its LaTeX is dropped. Returns the final expression and
    the composed renaming; the expression is `e` itself when no step applied.
    """
    catalog = PASS_CATALOG
    fresh = FreshSymbolSource.for_expr(e)
    renaming: dict[str, str] = {}

    for step, pass_id in enumerate(plan):
        transform = catalog[pass_id]
        if not can_apply(transform, e):
            logger.warning(f'Equation {equation_index}: pass {pass_id} not applicable at step {step}, skipped')
            continue
        rng = stream(seed, equation_index, APPLY_STREAM, step)
        step_renaming: dict[str, str] = {}
        if transform.semantics_class is SemanticsClass.RENAMING:
            result = transform.apply(e, rng, fresh)
            candidate, step_renaming = result.expr, result.renaming or {}
        else:
            candidate = map_sites(e, lambda site, t=transform, r=rng: t.apply(site, r, fresh).expr)
        if candidate == e:
            logger.warning(f'Equation {equation_index}: pass {pass_id} changed nothing at step {step}, skipped')
            continue
        if not round_trips(candidate):
            logger.warning(f'Equation {equation_index}: pass {pass_id} would not re-parse at step {step}, skipped')
            continue
        e = candidate
        renaming = compose_renamings(renaming, step_renaming)
        logger.debug(f'Equation {equation_index}: applied {pass_id}')

    return e, renaming

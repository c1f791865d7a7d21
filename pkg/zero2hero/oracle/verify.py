"""
Randomised equivalence check between an equation and its rewrite.
"""

from collections.abc import Mapping
from dataclasses import dataclass
from enum import Enum

import numpy as np

from zero2hero.core.errors import BudgetExhausted
from zero2hero.expr.nodes import Expr
from zero2hero.oracle.assignment import random_assignment
from zero2hero.oracle.evaluator import EvalResult, FailureReason, evaluate
from zero2hero.passes.plan import sites
from zero2hero.utils.logger import get_logger

logger = get_logger(__name__)

VERIFY_STREAM = 2
REDRAW_FACTOR = 10


class Verdict(Enum):
    PASS = 'PASS'
    FAIL = 'FAIL'
    INDETERMINATE = 'INDETERMINATE'


@dataclass(frozen=True)
class VerificationReport:
    verdict: Verdict
    trials: int
    max_deviation: float = 0.0
    redraws: int = 0
    detail: str = ''

    @property
    def passed(self) -> bool:
        return self.verdict is not Verdict.FAIL


def relative_deviation(expected: float, actual: float) -> float:
    return abs(expected - actual) / max(1.0, abs(expected))


def _is_domain_error(result: EvalResult) -> bool:
    return result.reason is FailureReason.DOMAIN_ERROR


def verify_equiv(
    original: Expr,
    transformed: Expr,
    renaming: Mapping[str, str] | None = None,
    trials: int = 20,
    tol: float = 1e-9,
    seed: int = 0,
) -> VerificationReport:
    """
    Compare `original` and `transformed` numerically over random assignments.

    Rows and relation sides are compared pairwise. Each trial binds the
    original's free symbols, maps them through `renaming`, and binds any
    symbol only the rewrite has (such as a fresh angle) at random.

    A draw where either side hits a domain error is redrawn. Pairs that
    neither side can evaluate make the verdict INDETERMINATE; a pair only one
    side can evaluate is a FAIL.

    Raises:
        BudgetExhausted: more than 10 x `trials` draws were redrawn
    """
    left_parts, right_parts = sites(original), sites(transformed)
    if len(left_parts) != len(right_parts):
        return VerificationReport(Verdict.FAIL, 0, detail='different number of rows or relation sides')

    completed = redraws = attempt = 0
    max_deviation = 0.0
    compared = indeterminate = False

    while completed < trials:
        if redraws > REDRAW_FACTOR * trials:
            raise BudgetExhausted(redraws, trials)
        rng = np.random.default_rng(np.random.SeedSequence([seed, VERIFY_STREAM, attempt]))
        attempt += 1
        assignment = random_assignment(original, rng)
        transformed_assignment = assignment.renamed(renaming).extended(transformed, rng)

        results = [
            (evaluate(left, assignment), evaluate(right, transformed_assignment))
            for left, right in zip(left_parts, right_parts)
        ]
        if any(_is_domain_error(a) or _is_domain_error(b) for a, b in results):
            redraws += 1
            continue

        for index, (expected, actual) in enumerate(results):
            if expected.ok and actual.ok:
                compared = True
                max_deviation = max(max_deviation, relative_deviation(expected.value, actual.value))
            elif expected.ok or actual.ok:
                failing = actual if expected.ok else expected
                return VerificationReport(
                    Verdict.FAIL,
                    completed + 1,
                    max_deviation,
                    redraws,
                    f'part {index}: only one side evaluates ({failing.reason.value} {failing.detail})'.rstrip(),
                )
            else:
                indeterminate = True
        completed += 1
        if not compared:
            # Nothing evaluable; more draws cannot change that
            break

    if max_deviation > tol:
        verdict = Verdict.FAIL
    elif indeterminate or not compared:
        verdict = Verdict.INDETERMINATE
    else:
        verdict = Verdict.PASS
    logger.debug(f'Verification {verdict.value}: {completed} trials, max deviation {max_deviation:.3g}')
    return VerificationReport(verdict, completed, max_deviation, redraws)

"""
The document pipeline: scan, parse, plan, rewrite, verify, score and splice.

`run` transforms a document, `score_document` only measures it and
`verify_documents` audits a finished run by replaying its plans.
"""

import hashlib
from collections.abc import Callable, Iterable, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import TypeVar

from zero2hero.core.errors import (
    BudgetExhausted,
    ConfigError,
    DocumentError,
    MarkerPresentError,
    SoundnessError,
    StructuralMismatchError,
)
from zero2hero.document import DocumentMarker, Segment, detect_marker, math_segments, scan, splice, strip_marker
from zero2hero.expr import Expr, canonical, emit, parse_math
from zero2hero.metrics import ComplexityScore, score
from zero2hero.oracle import VerificationReport, Verdict, verify_equiv
from zero2hero.passes import apply_plan, plan_passes
from zero2hero.settings import settings
from zero2hero.utils.file_manager import FileManager
from zero2hero.utils.logger import get_logger

logger = get_logger(__name__)

T = TypeVar('T')
R = TypeVar('R')


class EquationStatus(Enum):
    TRANSFORMED = 'transformed'
    UNCHANGED = 'unchanged'
    SKIPPED = 'skipped'
    SCORED = 'scored'
    AUDITED = 'audited'


@dataclass(frozen=True)
class RunConfig:
    input_path: Path
    output_path: Path | None = None
    seed: int | None = None
    intensity: int = 3
    passes: tuple[str, ...] | None = None
    force: bool = False
    dry_run: bool = False
    verify_trials: int = 20
    tolerance: float = 1e-9
    workers: int = 4


@dataclass(frozen=True)
class EquationRow:
    """One report row per math segment, in document order."""

    index: int
    status: EquationStatus
    plan: tuple[str, ...] = ()
    truncated: bool = False
    verdict: Verdict | None = None
    before: ComplexityScore | None = None
    after: ComplexityScore | None = None
    trials: int = 0
    max_deviation: float = 0.0
    detail: str = ''

    @property
    def delta(self) -> int:
        if self.before is None or self.after is None:
            return 0
        return self.after.total - self.before.total


@dataclass
class RunReport:
    rows: list[EquationRow] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)
    seed: int | None = None
    intensity: int | None = None
    output: str | None = None

    @property
    def total_before(self) -> int:
        return sum(row.before.total for row in self.rows if row.before is not None)

    @property
    def total_after(self) -> int:
        return sum(row.after.total for row in self.rows if row.after is not None)

    def count(self, status: EquationStatus) -> int:
        return sum(1 for row in self.rows if row.status is status)

    def verdicts(self, verdict: Verdict) -> int:
        return sum(1 for row in self.rows if row.verdict is verdict)

    @property
    def failed(self) -> bool:
        return self.verdicts(Verdict.FAIL) > 0


def content_seed(text: str) -> int:
    """First eight bytes of the SHA-256 of the document, as an unsigned integer."""
    return int.from_bytes(hashlib.sha256(text.encode('utf-8')).digest()[:8], 'big')


def resolve_seed(explicit: int | None, text: str) -> int:
    """--seed, then ZERO2HERO_SEED, then the content hash."""
    settings.require_valid()
    if explicit is not None:
        return explicit
    if settings.SEED is not None:
        return settings.SEED
    return content_seed(text)


def split_padding(inner: str) -> tuple[str, str, str]:
    """Leading whitespace, the math itself and trailing whitespace."""
    body = inner.strip()
    if not body:
        return inner, '', ''
    start = inner.index(body)
    return inner[:start], body, inner[start + len(body) :]


def map_in_order(fn: Callable[[T], R], items: Iterable[T], workers: int) -> list[R]:
    """Map over `items` on a thread pool, returning results in input order."""
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(fn, items))


def _skipped(index: int, reason: str) -> EquationRow:
    logger.warning(f'Skipping equation {index}: {reason}')
    return EquationRow(index, EquationStatus.SKIPPED, detail=reason)


def _parse_segment(index: int, segment: Segment) -> Expr | EquationRow:
    if not segment.inner.strip():
        return EquationRow(index, EquationStatus.SKIPPED, detail='empty math')
    outcome = parse_math(segment.inner)
    if not outcome.ok:
        return _skipped(index, f'{outcome.result.reason} at offset {outcome.result.offset}')
    return outcome.expr


def transform_equation(index: int, segment: Segment, config: RunConfig, seed: int) -> tuple[EquationRow, str | None]:
    """
    Rewrite one equation and certify the rewrite.

    Returns the report row and the replacement inner text, or None when the
    segment stays as it is.

    Raises:
        SoundnessError: the rewrite changed the value of the equation
    """
    parsed = _parse_segment(index, segment)
    if isinstance(parsed, EquationRow):
        return parsed, None

    before = score(parsed)
    plan = plan_passes(seed, index, config.intensity, parsed, config.passes)
    if not plan:
        return EquationRow(index, EquationStatus.UNCHANGED, truncated=plan.truncated, before=before, after=before), None

    transformed, renaming = apply_plan(parsed, plan, seed, index)
    if transformed == parsed:
        logger.warning(f'Equation {index}: no pass of [{", ".join(plan)}] took effect; left unchanged')
        row = EquationRow(
            index, EquationStatus.UNCHANGED, plan=tuple(plan), truncated=plan.truncated, before=before, after=before
        )
        return row, None
    try:
        verification = verify_equiv(
            parsed, transformed, renaming, trials=config.verify_trials, tol=config.tolerance, seed=seed
        )
    except BudgetExhausted as e:
        logger.warning(f'Equation {index}: {e}; reporting INDETERMINATE')
        verification = VerificationReport(Verdict.INDETERMINATE, 0, detail=str(e))
    verdict = verification.verdict
    if verdict is Verdict.FAIL:
        raise SoundnessError(
            f'Equation {index}: plan [{", ".join(plan)}] changed its value '
            f'(max deviation {verification.max_deviation:.3g}) {verification.detail}'.rstrip()
        )

    lead, _, trail = split_padding(segment.inner)
    row = EquationRow(
        index,
        EquationStatus.TRANSFORMED,
        plan=tuple(plan),
        truncated=plan.truncated,
        verdict=verdict,
        before=before,
        after=score(canonical(transformed)),
        trials=verification.trials,
        max_deviation=verification.max_deviation,
        detail=verification.detail,
    )
    return row, lead + emit(transformed) + trail


def _read_source(path: Path) -> str:
    return FileManager().read_text(path)


def run(config: RunConfig) -> RunReport:
    """
    Transform every parseable equation of a document.

    Raises:
        MarkerPresentError: the input was produced by zero2hero and `force` is off
        ConfigError: the output would overwrite the input without `force`
        SoundnessError: a rewrite failed verification
        DocumentError: the input cannot be read or scanned
    """
    if (
        config.output_path is not None
        and not config.force
        and config.output_path.resolve() == config.input_path.resolve()
    ):
        raise ConfigError('Output path equals input path; pass --force to overwrite the input')

    source = _read_source(config.input_path)
    if detect_marker(source).present:
        if not config.force:
            raise MarkerPresentError(
                f'{config.input_path} already carries a zero2hero marker. Applying zero2hero twice to the same '
                'equations is not supported; pass --force to run anyway'
            )
        logger.warning(f'{config.input_path}: replacing the existing zero2hero marker (--force)')
        source = strip_marker(source)

    seed = resolve_seed(config.seed, source)
    segments = scan(source)
    equations = math_segments(segments)
    logger.info(f'Transforming {len(equations)} equations (seed={seed}, intensity={config.intensity})')

    results = map_in_order(
        lambda item: transform_equation(item[0], item[1][1], config, seed),
        enumerate(equations),
        config.workers,
    )

    report = RunReport(seed=seed, intensity=config.intensity)
    replacements: dict[int, str] = {}
    for (segment_index, _), (row, replacement) in zip(equations, results):
        report.rows.append(row)
        if row.status is EquationStatus.SKIPPED:
            report.warnings.append(f'eq#{row.index} skipped: {row.detail}')
        if row.truncated:
            report.warnings.append(f'eq#{row.index} plan truncated to {len(row.plan)} passes')
        if replacement is not None:
            replacements[segment_index] = replacement

    marker = DocumentMarker(present=True, seed=seed, intensity=config.intensity, tool_version=settings.TOOL_VERSION)
    report.output = splice(segments, replacements, marker)

    if config.dry_run or config.output_path is None:
        logger.info('Dry run: no output written')
    else:
        FileManager().write_text(config.output_path, report.output)
        logger.info(f'Wrote {config.output_path}')
    return report


def score_document(input_path: Path) -> RunReport:
    """Parse and score every equation without transforming anything."""
    source = _read_source(input_path)
    report = RunReport()
    for index, (_, segment) in enumerate(math_segments(scan(source))):
        parsed = _parse_segment(index, segment)
        if isinstance(parsed, EquationRow):
            report.rows.append(parsed)
            report.warnings.append(f'eq#{index} skipped: {parsed.detail}')
            continue
        report.rows.append(EquationRow(index, EquationStatus.SCORED, before=score(parsed)))
    return report


def audit_pair(
    index: int,
    original: Segment,
    transformed: Segment,
    marker: DocumentMarker,
    passes: Sequence[str] | None,
    trials: int,
    tolerance: float,
) -> EquationRow:
    """Check one (original, transformed) equation pair, replaying the run's plan for its renaming."""
    parsed = _parse_segment(index, original)
    if isinstance(parsed, EquationRow):
        if original.inner == transformed.inner:
            return EquationRow(index, EquationStatus.SKIPPED, verdict=Verdict.INDETERMINATE, detail=parsed.detail)
        return EquationRow(index, EquationStatus.AUDITED, verdict=Verdict.FAIL, detail='unparseable original changed')

    rewritten = _parse_segment(index, transformed)
    if isinstance(rewritten, EquationRow):
        return EquationRow(index, EquationStatus.AUDITED, verdict=Verdict.FAIL, detail=f'rewrite {rewritten.detail}')

    plan = plan_passes(marker.seed, index, marker.intensity, parsed, passes)
    _, renaming = apply_plan(parsed, plan, marker.seed, index)
    try:
        verification = verify_equiv(parsed, rewritten, renaming, trials=trials, tol=tolerance, seed=marker.seed)
    except BudgetExhausted as e:
        logger.warning(f'Equation {index}: {e}')
        verification = VerificationReport(Verdict.INDETERMINATE, 0, detail=str(e))

    return EquationRow(
        index,
        EquationStatus.AUDITED,
        plan=tuple(plan),
        verdict=verification.verdict,
        before=score(parsed),
        after=score(rewritten),
        trials=verification.trials,
        max_deviation=verification.max_deviation,
        detail=verification.detail,
    )


def verify_documents(
    original_path: Path,
    transformed_path: Path,
    passes: Sequence[str] | None = None,
    trials: int = 20,
    tolerance: float = 1e-9,
    workers: int = 4,
) -> RunReport:
    """
    Audit a finished run equation by equation.

    Raises:
        DocumentError: the transformed document has no marker
        StructuralMismatchError: the documents have different numbers of equations
    """
    original_source = _read_source(original_path)
    transformed_source = _read_source(transformed_path)
    marker = detect_marker(transformed_source)
    if not marker.present:
        raise DocumentError(
            f'{transformed_path} has no zero2hero marker, so the seed and intensity of its run are unknown'
        )

    originals = math_segments(scan(strip_marker(original_source)))
    rewrites = math_segments(scan(strip_marker(transformed_source)))
    if len(originals) != len(rewrites):
        raise StructuralMismatchError(
            f'{original_path} has {len(originals)} equations but {transformed_path} has {len(rewrites)}'
        )

    rows = map_in_order(
        lambda item: audit_pair(item[0], item[1][0][1], item[1][1][1], marker, passes, trials, tolerance),
        enumerate(zip(originals, rewrites)),
        workers,
    )
    report = RunReport(rows=rows, seed=marker.seed, intensity=marker.intensity)
    for row in rows:
        if row.verdict is Verdict.FAIL:
            report.warnings.append(f'eq#{row.index} FAIL: {row.detail}'.rstrip(': '))
    return report

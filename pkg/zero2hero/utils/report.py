"""
Report rendering for the command line: plain text or one JSON object per line.
"""

import json
from typing import Any

from zero2hero.metrics import report_row
from zero2hero.oracle import Verdict
from zero2hero.pipeline import EquationRow, EquationStatus, RunReport

TEXT = 'text'
MACHINE = 'machine'
FORMATS = (TEXT, MACHINE)


def _plan(row: EquationRow) -> str:
    return f'plan=[{", ".join(row.plan)}]'


def row_to_dict(row: EquationRow) -> dict[str, Any]:
    """Serialize a report row."""
    return {
        'eq': row.index,
        'status': row.status.value,
        'plan': list(row.plan),
        'truncated': row.truncated,
        'verdict': row.verdict.value if row.verdict else None,
        'before': row.before.to_dict() if row.before else None,
        'after': row.after.to_dict() if row.after else None,
        'delta': row.delta,
        'trials': row.trials,
        'max_deviation': row.max_deviation,
        'detail': row.detail,
    }


def _summary(report: RunReport) -> dict[str, Any]:
    summary = {
        'equations': len(report.rows),
        'transformed': report.count(EquationStatus.TRANSFORMED),
        'skipped': report.count(EquationStatus.SKIPPED),
        'total_before': report.total_before,
        'total_after': report.total_after,
    }
    if report.seed is not None:
        summary['seed'] = report.seed
        summary['intensity'] = report.intensity
    return summary


def _machine(report: RunReport) -> list[str]:
    lines = [json.dumps(row_to_dict(row), ensure_ascii=False) for row in report.rows]
    lines.append(json.dumps({'summary': _summary(report), 'warnings': report.warnings}, ensure_ascii=False))
    return lines


def _run_line(row: EquationRow) -> str:
    if row.status is EquationStatus.SKIPPED:
        return f'eq#{row.index} skipped: {row.detail}'
    line = f'{report_row(row.index, row.before, row.after)} {_plan(row)}'
    if row.verdict is not None:
        line += f' {row.verdict.value}'
    return line


def _score_line(row: EquationRow) -> str:
    if row.before is None:
        return f'eq#{row.index} skipped: {row.detail}'
    s = row.before
    return (
        f'eq#{row.index} nodes={s.node_count} greek={s.greek_count} bigops={s.bigop_count} '
        f'depth={s.max_depth} diversity={s.op_diversity} total={s.total}'
    )


def _verify_line(row: EquationRow) -> str:
    verdict = row.verdict.value if row.verdict else '-'
    line = f'eq#{row.index} {verdict} trials={row.trials} max_dev={row.max_deviation:.3g} {_plan(row)}'
    return f'{line} {row.detail}' if row.detail else line


def _text(report: RunReport, render_row) -> list[str]:
    lines = [render_row(row) for row in report.rows]
    lines.append(' '.join(f'{key}={value}' for key, value in _summary(report).items()))
    return lines


def render_run(report: RunReport, fmt: str = TEXT) -> list[str]:
    return _machine(report) if fmt == MACHINE else _text(report, _run_line)


def render_score(report: RunReport, fmt: str = TEXT) -> list[str]:
    return _machine(report) if fmt == MACHINE else _text(report, _score_line)


def render_verify(report: RunReport, fmt: str = TEXT) -> list[str]:
    """Per-pair verdicts, then the summary."""
    if fmt == MACHINE:
        return _machine(report)
    lines = _text(report, _verify_line)
    counts = ' '.join(f'{verdict.value}={report.verdicts(verdict)}' for verdict in Verdict)
    return [*lines, counts]

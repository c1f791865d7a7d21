"""
`zero2hero verify`: audit a finished run.
"""

import click

from zero2hero.commands.run import split_passes
from zero2hero.core.errors import AuditFailed
from zero2hero.oracle import Verdict
from zero2hero.pipeline import verify_documents
from zero2hero.schemas import verify_schema
from zero2hero.utils.decorators import handle_errors
from zero2hero.utils.report import render_verify


@click.command('verify')
@click.option('--original', 'original_path', help='Document given to zero2hero run')
@click.option('--transformed', 'transformed_path', help='Document zero2hero run produced')
@click.option('--passes', help='Pass allow-list the run used')
@click.option('--trials', type=int, help='Random assignments per equivalence check')
@click.option('--tol', type=float, help='Relative tolerance of the equivalence check')
@click.option('--workers', type=int, help='Equation pairs processed in parallel')
@click.option('--format', 'fmt', type=click.Choice(['text', 'machine']), default='text', help='Report format')
@handle_errors
def verify_command(original_path, transformed_path, passes, trials, tol, workers, fmt):
    """Replay a run and check every equation pair numerically."""
    options = verify_schema().validate(
        {
            'original_path': original_path,
            'transformed_path': transformed_path,
            'passes': split_passes(passes),
            'trials': trials,
            'tol': tol,
            'workers': workers,
            'format': fmt,
        }
    )
    report = verify_documents(
        options['original_path'],
        options['transformed_path'],
        passes=options['passes'] or None,
        trials=options['trials'],
        tolerance=options['tol'],
        workers=options['workers'],
    )
    for line in render_verify(report, options['format']):
        click.echo(line)
    if report.failed:
        raise AuditFailed(f'{report.verdicts(Verdict.FAIL)} equation pairs failed verification')

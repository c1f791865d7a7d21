"""
`zero2hero run`: rewrite a document.
"""

import click

from zero2hero.core.errors import ConfigError
from zero2hero.pipeline import RunConfig, run
from zero2hero.schemas import run_schema
from zero2hero.utils.decorators import handle_errors
from zero2hero.utils.report import render_run


def split_passes(raw: str | None) -> list[str] | None:
    if raw is None:
        return None
    return [item.strip() for item in raw.split(',') if item.strip()]


@click.command('run')
@click.option('--input', 'input_path', help='LaTeX document to rewrite')
@click.option('--output', 'output_path', help='Where to write the rewritten document')
@click.option('--seed', type=int, help='Random seed (default: ZERO2HERO_SEED, then a hash of the input)')
@click.option('--intensity', type=int, help='Passes per equation, 0 to 5')
@click.option('--passes', help='Comma-separated pass ids to draw from')
@click.option('--force', is_flag=True, help='Run on a document that already carries a marker')
@click.option('--dry-run', is_flag=True, help='Report only; write nothing')
@click.option('--trials', type=int, help='Random assignments per equivalence check')
@click.option('--tol', type=float, help='Relative tolerance of the equivalence check')
@click.option('--workers', type=int, help='Equations processed in parallel')
@click.option('--format', 'fmt', type=click.Choice(['text', 'machine']), default='text', help='Report format')
@handle_errors
def run_command(input_path, output_path, seed, intensity, passes, force, dry_run, trials, tol, workers, fmt):
    """Rewrite every equation of a document into a harder-looking equivalent."""
    options = run_schema().validate(
        {
            'input_path': input_path,
            'output_path': output_path,
            'seed': seed,
            'intensity': intensity,
            'passes': split_passes(passes),
            'force': force,
            'dry_run': dry_run,
            'trials': trials,
            'tol': tol,
            'workers': workers,
            'format': fmt,
        }
    )
    if options['output_path'] is None and not options['dry_run']:
        raise ConfigError('--output is required unless --dry-run is given')

    config = RunConfig(
        input_path=options['input_path'],
        output_path=options['output_path'],
        seed=options['seed'],
        intensity=options['intensity'],
        passes=tuple(options['passes']) if options['passes'] else None,
        force=options['force'],
        dry_run=options['dry_run'],
        verify_trials=options['trials'],
        tolerance=options['tol'],
        workers=options['workers'],
    )
    report = run(config)
    for line in render_run(report, options['format']):
        click.echo(line)

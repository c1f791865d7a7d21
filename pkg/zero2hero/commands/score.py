"""
`zero2hero score`: measure a document without changing it.
"""

import click

from zero2hero.pipeline import score_document
from zero2hero.schemas import score_schema
from zero2hero.utils.decorators import handle_errors
from zero2hero.utils.report import render_score


@click.command('score')
@click.option('--input', 'input_path', help='LaTeX document to score')
@click.option('--format', 'fmt', type=click.Choice(['text', 'machine']), default='text', help='Report format')
@handle_errors
def score_command(input_path, fmt):
    """Print the complexity score of every equation."""
    options = score_schema().validate({'input_path': input_path, 'format': fmt})
    for line in render_score(score_document(options['input_path']), options['format']):
        click.echo(line)

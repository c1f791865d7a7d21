"""
Utility decorators for CLI commands.
"""

import sys
from functools import wraps

import click

from zero2hero.core.errors import Zero2HeroError
from zero2hero.core.validator import ValidationError
from zero2hero.settings import settings
from zero2hero.utils.logger import get_logger

logger = get_logger(__name__)


def handle_errors(f):
    """
    Decorator to turn exceptions into exit codes.

    Usage:
        @click.command()
        @handle_errors
        def score(input_path):
            # Your code here
            pass
    """

    @wraps(f)
    def wrapper(*args, **kwargs):
        try:
            settings.require_valid()
            return f(*args, **kwargs)
        except ValidationError as e:
            logger.warning(f'{f.__name__}: Validation error - {e.errors}')
            click.echo(f'Error: {e}', err=True)
            sys.exit(e.exit_code)
        except Zero2HeroError as e:
            logger.warning(f'{f.__name__}: {type(e).__name__} - {e!s}')
            click.echo(f'Error: {e}', err=True)
            sys.exit(e.exit_code)
        except Exception as e:
            logger.error(f'{f.__name__}: Unexpected error - {e!s}', exc_info=True)
            click.echo(f'Internal error: {e}', err=True)
            sys.exit(1)

    return wrapper

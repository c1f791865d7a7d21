import logging

import click

from zero2hero import __version__
from zero2hero.settings import settings
from zero2hero.utils.logger import Logger, get_logger

logger = get_logger(__name__)


def create_cli() -> click.Group:
    @click.group(help='Rewrite the equations of a LaTeX document into harder-looking equivalents.')
    @click.version_option(__version__, prog_name=settings.TOOL_NAME)
    @click.option('--verbose', '-v', is_flag=True, help='Log at DEBUG level')
    def cli(verbose):
        if verbose:
            Logger.set_all_levels(logging.DEBUG)
            logger.debug(f'Settings: {settings.to_dict()}')

    # Register commands
    from zero2hero.commands import run_command, score_command, verify_command

    cli.add_command(run_command)
    cli.add_command(score_command)
    cli.add_command(verify_command)

    return cli


def main():
    create_cli()(prog_name=settings.TOOL_NAME)

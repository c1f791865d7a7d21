"""
CLI commands. Each module defines one click command registered by `create_cli`.
"""

from zero2hero.commands.run import run_command
from zero2hero.commands.score import score_command
from zero2hero.commands.verify import verify_command

__all__ = ['run_command', 'score_command', 'verify_command']

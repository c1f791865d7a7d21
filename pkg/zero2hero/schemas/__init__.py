"""
Validation schemas for command options.
"""

from zero2hero.schemas.run import run_schema, score_schema, verify_schema

__all__ = ['run_schema', 'score_schema', 'verify_schema']

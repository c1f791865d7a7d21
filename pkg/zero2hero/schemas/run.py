"""
Option schemas for the zero2hero commands.
"""

from zero2hero.core import Schema
from zero2hero.passes import PASS_IDS
from zero2hero.settings import U64_MAX, settings
from zero2hero.utils.report import FORMATS

MAX_INTENSITY = 5


def _trials():
    return Schema.number().int().min(1).default(settings.VERIFY_TRIALS)


def _tolerance():
    return Schema.number().float().positive().default(settings.TOLERANCE)


def _workers():
    return Schema.number().int().min(1).default(settings.WORKERS)


def _passes():
    return Schema.array(Schema.enum(PASS_IDS)).nonempty().unique()


def _format():
    return Schema.enum(FORMATS).default('text')


def run_schema() -> Schema:
    """Built on demand so defaults follow the current settings."""
    return Schema(
        {
            'input_path': Schema.path().exists().required(),
            'output_path': Schema.path(),
            'seed': Schema.number().int().min(0).max(U64_MAX, 'must fit in 64 bits'),
            'intensity': Schema.number().int().min(0).max(MAX_INTENSITY).default(settings.INTENSITY),
            'passes': _passes(),
            'force': Schema.boolean(),
            'dry_run': Schema.boolean(),
            'trials': _trials(),
            'tol': _tolerance(),
            'workers': _workers(),
            'format': _format(),
        }
    )


def score_schema() -> Schema:
    return Schema({'input_path': Schema.path().exists().required(), 'format': _format()})


def verify_schema() -> Schema:
    return Schema(
        {
            'original_path': Schema.path().exists().required(),
            'transformed_path': Schema.path().exists().required(),
            'passes': _passes(),
            'trials': _trials(),
            'tol': _tolerance(),
            'workers': _workers(),
            'format': _format(),
        }
    )

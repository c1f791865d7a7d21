"""
Reusable library classes: option validation and the error hierarchy.
"""

from zero2hero.core.errors import (
    AuditFailed,
    BudgetExhausted,
    ConfigError,
    DocumentError,
    MarkerPresentError,
    SoundnessError,
    StructuralMismatchError,
    Zero2HeroError,
)
from zero2hero.core.validator import Schema, ValidationError

__all__ = [
    'AuditFailed',
    'BudgetExhausted',
    'ConfigError',
    'DocumentError',
    'MarkerPresentError',
    'Schema',
    'SoundnessError',
    'StructuralMismatchError',
    'ValidationError',
    'Zero2HeroError',
]

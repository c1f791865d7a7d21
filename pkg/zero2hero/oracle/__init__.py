"""
Numeric oracle: random assignments, real-valued evaluation and the equivalence check.
"""

from zero2hero.oracle.assignment import Assignment, random_assignment
from zero2hero.oracle.evaluator import EvalResult, FailureReason, NotEvaluable, evaluate
from zero2hero.oracle.verify import VerificationReport, Verdict, verify_equiv

__all__ = [
    'Assignment',
    'EvalResult',
    'FailureReason',
    'NotEvaluable',
    'Verdict',
    'VerificationReport',
    'evaluate',
    'random_assignment',
    'verify_equiv',
]

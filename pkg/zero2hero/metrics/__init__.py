"""
Complexity metric.
"""

from zero2hero.metrics.complexity import ComplexityScore, Ordering, compare, report_row, score

__all__ = ['ComplexityScore', 'Ordering', 'compare', 'report_row', 'score']

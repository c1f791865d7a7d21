"""
Mathematical and physical constants bound in every assignment.
"""

import math

from zero2hero.expr.nodes import ConstantKind

PI = math.pi
E = math.e
# Planck constant in J s, exact by SI definition
PLANCK_H = 6.62607015e-34
HBAR = PLANCK_H / (2 * math.pi)

CONSTANT_VALUES: dict[ConstantKind, float] = {
    ConstantKind.PI: PI,
    ConstantKind.E: E,
    ConstantKind.H: PLANCK_H,
    ConstantKind.HBAR: HBAR,
}

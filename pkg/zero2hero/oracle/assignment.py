"""
Symbol assignments for numeric evaluation.
"""

from collections.abc import Mapping
from dataclasses import dataclass, field

import numpy as np

from zero2hero.expr.nodes import ConstantKind, Expr
from zero2hero.expr.symbols import free_symbols
from zero2hero.oracle.constants import CONSTANT_VALUES

LOW = 0.1
HIGH = 10.0


def draw_value(rng: np.random.Generator) -> float:
    """Uniform on [-10, -0.1] ∪ [0.1, 10]."""
    magnitude = float(rng.uniform(LOW, HIGH))
    return magnitude if rng.integers(2) else -magnitude


@dataclass(frozen=True)
class Assignment:
    bindings: dict[str, float] = field(default_factory=dict, hash=False)

    @property
    def constants(self) -> Mapping[ConstantKind, float]:
        return CONSTANT_VALUES

    def __contains__(self, key: str) -> bool:
        return key in self.bindings

    def __getitem__(self, key: str) -> float:
        return self.bindings[key]

    def renamed(self, renaming: Mapping[str, str] | None) -> 'Assignment':
        """The assignment seen through a renaming: each new name takes its old name's value."""
        if not renaming:
            return self
        bindings = dict(self.bindings)
        for old, new in renaming.items():
            if old in self.bindings:
                bindings[new] = self.bindings[old]
        return Assignment(bindings)

    def extended(self, e: Expr, rng: np.random.Generator) -> 'Assignment':
        """Bind the free symbols of `e` that are still unbound to fresh random values."""
        missing = sorted(free_symbols(e) - self.bindings.keys())
        if not missing:
            return self
        bindings = dict(self.bindings)
        for key in missing:
            bindings[key] = draw_value(rng)
        return Assignment(bindings)


def random_assignment(e: Expr, rng: np.random.Generator) -> Assignment:
    """Bind every free symbol of `e`, in sorted order, to a random nonzero value."""
    return Assignment().extended(e, rng)

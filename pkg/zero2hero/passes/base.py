"""
Base class for rewrite passes.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from enum import Enum
from typing import ClassVar

from numpy.random import Generator

from zero2hero.expr.nodes import Expr
from zero2hero.passes.fresh import FreshSymbolSource


class SemanticsClass(Enum):
    EXACT_IDENTITY = 'exact-identity'
    RENAMING = 'renaming'


@dataclass(frozen=True)
class RewriteResult:
    expr: Expr
    renaming: dict[str, str] | None = field(default=None, hash=False)


class TransformPass(ABC):
    """
    A value-preserving rewrite with a stable id.

    Exact identity passes rewrite one site (a row body or a relation side) at
    a time. Renaming passes see the whole equation and report the symbol
    bijection they applied.
    """

    id: ClassVar[str] = 'pass'
    description: ClassVar[str] = 'A value-preserving rewrite'
    semantics_class: ClassVar[SemanticsClass] = SemanticsClass.EXACT_IDENTITY
    # Names tried before the general fresh-symbol order
    preferred: ClassVar[tuple[str, ...]] = ()

    def applicable(self, e: Expr) -> bool:  # noqa: ARG002
        return True

    @abstractmethod
    def apply(self, e: Expr, rng: Generator, fresh: FreshSymbolSource) -> RewriteResult:
        return NotImplemented

    def __str__(self):
        return f'{type(self).__name__}({self.id})'

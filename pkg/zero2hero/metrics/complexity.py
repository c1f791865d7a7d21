"""
How complicated an expression looks.

The weights are frozen: reports and golden files depend on them.
"""

import re
from dataclasses import dataclass
from enum import Enum

from zero2hero.expr.nodes import GREEK_NAMES, BigOp, Expr, Greek, Opaque, Partial, iter_children, walk

NODE_WEIGHT = 1
GREEK_WEIGHT = 2
BIGOP_WEIGHT = 3
DEPTH_WEIGHT = 2
DIVERSITY_WEIGHT = 1

_COMMAND = re.compile(r'\\([A-Za-z]+)')


class Ordering(Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class ComplexityScore:
    node_count: int = 0
    greek_count: int = 0
    bigop_count: int = 0
    max_depth: int = 0
    op_diversity: int = 0

    @property
    def total(self) -> int:
        return (
            NODE_WEIGHT * self.node_count
            + GREEK_WEIGHT * self.greek_count
            + BIGOP_WEIGHT * self.bigop_count
            + DEPTH_WEIGHT * self.max_depth
            + DIVERSITY_WEIGHT * self.op_diversity
        )

    def to_dict(self) -> dict[str, int]:
        return {
            'node_count': self.node_count,
            'greek_count': self.greek_count,
            'bigop_count': self.bigop_count,
            'max_depth': self.max_depth,
            'op_diversity': self.op_diversity,
            'total': self.total,
        }


def greek_in_raw(raw: str) -> int:
    """Greek letter commands in unparsed text."""
    return sum(1 for name in _COMMAND.findall(raw) if name in GREEK_NAMES)


def depth(e: Expr) -> int:
    return 1 + max((depth(child) for child in iter_children(e)), default=0)


def score(e: Expr) -> ComplexityScore:
    nodes = greek = bigops = 0
    kinds: set[str] = set()
    for node in walk(e):
        nodes += 1
        kinds.add(node.tag)
        match node:
            case Greek():
                greek += 1
            case Opaque(raw=raw):
                greek += greek_in_raw(raw)
            case BigOp() | Partial():
                bigops += 1
    return ComplexityScore(nodes, greek, bigops, depth(e), len(kinds))


def _key(s: ComplexityScore) -> tuple[int, int, int, int]:
    return s.total, s.bigop_count, s.greek_count, s.node_count


def compare(before: ComplexityScore, after: ComplexityScore) -> Ordering:
    """Order by total, then big operators, Greek letters and node count."""
    a, b = _key(before), _key(after)
    if a < b:
        return Ordering.LESS
    if a > b:
        return Ordering.GREATER
    return Ordering.EQUAL


def report_row(index: int, before: ComplexityScore, after: ComplexityScore) -> str:
    return (
        f'eq#{index} before={before.total} after={after.total} Δ={after.total - before.total} '
        f'greek {after.greek_count - before.greek_count:+d} bigops {after.bigop_count - before.bigop_count:+d}'
    )

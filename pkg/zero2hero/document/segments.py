"""
Document segment types.
"""

from dataclasses import dataclass
from enum import Enum

# Environments that open a math segment at top level, starred variants included
MATH_ENVIRONMENTS = frozenset(
    {'equation', 'align', 'gather', 'multline', 'eqnarray', 'displaymath'}
    | {f'{name}*' for name in ('equation', 'align', 'gather', 'multline', 'eqnarray')}
)

# Only recognized nested inside a math segment
NESTED_MATH_ENVIRONMENTS = frozenset({'split', 'aligned', 'gathered'})


class SegmentKind(Enum):
    PROSE = 'prose'
    MATH = 'math'


class DelimiterForm(Enum):
    INLINE_DOLLAR = 'inline-dollar'
    INLINE_PAREN = 'inline-paren'
    DISPLAY_DOLLAR = 'display-dollar'
    DISPLAY_BRACKET = 'display-bracket'
    ENVIRONMENT = 'environment'


_FIXED_DELIMITERS = {
    DelimiterForm.INLINE_DOLLAR: ('$', '$'),
    DelimiterForm.INLINE_PAREN: ('\\(', '\\)'),
    DelimiterForm.DISPLAY_DOLLAR: ('$$', '$$'),
    DelimiterForm.DISPLAY_BRACKET: ('\\[', '\\]'),
}


@dataclass(frozen=True)
class MathDelimiter:
    form: DelimiterForm
    name: str | None = None
    starred: bool = False

    @classmethod
    def environment(cls, name: str) -> 'MathDelimiter':
        return cls(DelimiterForm.ENVIRONMENT, name.removesuffix('*'), name.endswith('*'))

    @property
    def env_name(self) -> str:
        return f'{self.name}*' if self.starred else self.name

    @property
    def opener(self) -> str:
        if self.form is DelimiterForm.ENVIRONMENT:
            return f'\\begin{{{self.env_name}}}'
        return _FIXED_DELIMITERS[self.form][0]

    @property
    def closer(self) -> str:
        if self.form is DelimiterForm.ENVIRONMENT:
            return f'\\end{{{self.env_name}}}'
        return _FIXED_DELIMITERS[self.form][1]


@dataclass(frozen=True)
class Segment:
    """
    One slice of the source document.

    `raw` is the exact source slice. For math segments `raw` is
    `delimiter.opener + inner + delimiter.closer`.
    """

    kind: SegmentKind
    raw: str
    delimiter: MathDelimiter | None = None
    inner: str | None = None

    @classmethod
    def prose(cls, raw: str) -> 'Segment':
        return cls(SegmentKind.PROSE, raw)

    @classmethod
    def math(cls, delimiter: MathDelimiter, inner: str) -> 'Segment':
        return cls(SegmentKind.MATH, delimiter.opener + inner + delimiter.closer, delimiter, inner)

    @property
    def is_math(self) -> bool:
        return self.kind is SegmentKind.MATH


@dataclass(frozen=True)
class DocumentMarker:
    """First-line comment recording how a document was produced."""

    present: bool = False
    seed: int = 0
    intensity: int = 0
    tool_version: str = ''

    def to_line(self) -> str:
        return f'% zero2hero: seed={self.seed} intensity={self.intensity} v={self.tool_version}\n'


def math_segments(segments: list[Segment]) -> list[tuple[int, Segment]]:
    """Pair every math segment with its index in `segments`."""
    return [(i, segment) for i, segment in enumerate(segments) if segment.is_math]

"""
Lossless partition of a LaTeX source into prose and math segments, and the
inverse splice.
"""

import re

from zero2hero.core.errors import (
    DocumentError,
    IndexOutOfRange,
    ReplacementContainsDelimiter,
    UnbalancedDelimiter,
)
from zero2hero.document.segments import (
    MATH_ENVIRONMENTS,
    DelimiterForm,
    DocumentMarker,
    MathDelimiter,
    Segment,
)
from zero2hero.utils.logger import get_logger

logger = get_logger(__name__)

VERBATIM_ENVIRONMENTS = frozenset({'verbatim', 'verbatim*', 'lstlisting', 'comment'})

_BEGIN_PATTERN = re.compile(r'\\begin\{([^{}\s]*)\}')


def decode_source(source: str | bytes) -> str:
    """Decode a document as strict UTF-8."""
    if isinstance(source, str):
        return source
    try:
        return source.decode('utf-8')
    except UnicodeDecodeError as e:
        raise DocumentError(f'Input is not valid UTF-8 (byte offset {e.start})') from e


def byte_offset(text: str, index: int) -> int:
    return len(text[:index].encode('utf-8'))


def _skip_command(text: str, i: int) -> int:
    """Return the index after the control sequence starting at `text[i] == '\\'`."""
    j = i + 1
    if j < len(text) and text[j].isalpha():
        while j < len(text) and text[j].isalpha():
            j += 1
        return j
    return min(i + 2, len(text))


def _skip_comment(text: str, i: int) -> int:
    newline = text.find('\n', i)
    return len(text) if newline < 0 else newline + 1


def find_closer(text: str, start: int, closer: str) -> int:
    """
    Index of the first `closer` at or after `start` that really closes math.

    Control sequences are consumed whole (so `\\$` and `\\\\` never close),
    comments run to the end of their line, and dollar closers only count at
    brace depth zero (dollars inside `\\text{...}` belong to the argument).
    Returns -1 when there is none.
    """
    dollar = closer.startswith('$')
    depth = 0
    i = start
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == '\\':
            if not dollar and text.startswith(closer, i):
                return i
            i = _skip_command(text, i)
            continue
        if ch == '%':
            i = _skip_comment(text, i)
            continue
        if ch == '{':
            depth += 1
        elif ch == '}':
            depth -= 1
        elif ch == '$' and dollar and depth <= 0 and text.startswith(closer, i):
            return i
        i += 1
    return -1


def _skip_verb(text: str, i: int) -> int | None:
    """End of a `\\verb|...|` starting at `i`, or None when `i` is not one."""
    j = i + len('\\verb')
    if j < len(text) and text[j] == '*':
        j += 1
    if j >= len(text) or text[j].isalpha() or text[j].isspace():
        return None
    delimiter = text[j]
    end = text.find(delimiter, j + 1)
    newline = text.find('\n', j + 1)
    if end < 0 or (0 <= newline < end):
        return None
    return end + 1


def _open_delimiter(text: str, i: int) -> tuple[MathDelimiter | None, int]:
    """
    Classify the construct at `i`.

    Returns the math delimiter that opens there (if any) and the index where
    prose scanning continues when nothing opens.
    """
    ch = text[i]
    if ch == '$':
        if text.startswith('$$', i):
            return MathDelimiter(DelimiterForm.DISPLAY_DOLLAR), i
        return MathDelimiter(DelimiterForm.INLINE_DOLLAR), i

    nxt = text[i + 1] if i + 1 < len(text) else ''
    if nxt == '(':
        return MathDelimiter(DelimiterForm.INLINE_PAREN), i
    if nxt == '[':
        return MathDelimiter(DelimiterForm.DISPLAY_BRACKET), i
    if text.startswith('\\verb', i):
        end = _skip_verb(text, i)
        if end is not None:
            return None, end
    if text.startswith('\\begin{', i):
        match = _BEGIN_PATTERN.match(text, i)
        if match:
            name = match.group(1)
            if name in MATH_ENVIRONMENTS:
                return MathDelimiter.environment(name), i
            if name in VERBATIM_ENVIRONMENTS:
                end = text.find(f'\\end{{{name}}}', match.end())
                return None, len(text) if end < 0 else end + len(f'\\end{{{name}}}')
            return None, match.end()
    return None, _skip_command(text, i)


def scan(source: str | bytes) -> list[Segment]:
    """
    Split a LaTeX source into prose and math segments.

    Concatenating the `raw` of the result reproduces the input exactly.

    Raises:
        UnbalancedDelimiter: a math opener has no closer
        DocumentError: the input is not UTF-8
    """
    text = decode_source(source)
    segments: list[Segment] = []
    prose_start = 0
    i = 0
    n = len(text)

    while i < n:
        ch = text[i]
        if ch == '%':
            i = _skip_comment(text, i)
            continue
        if ch not in '$\\':
            i += 1
            continue

        delimiter, resume = _open_delimiter(text, i)
        if delimiter is None:
            i = resume
            continue

        inner_start = i + len(delimiter.opener)
        close = find_closer(text, inner_start, delimiter.closer)
        if close < 0:
            raise UnbalancedDelimiter(delimiter.opener, byte_offset(text, i))

        if prose_start < i:
            segments.append(Segment.prose(text[prose_start:i]))
        segments.append(Segment.math(delimiter, text[inner_start:close]))
        i = close + len(delimiter.closer)
        prose_start = i

    if prose_start < n:
        segments.append(Segment.prose(text[prose_start:]))

    logger.debug(f'Scanned {len(segments)} segments ({sum(s.is_math for s in segments)} math)')
    return segments


def _check_replacement(index: int, delimiter: MathDelimiter, replacement: str):
    closer = delimiter.closer
    if delimiter.form is DelimiterForm.INLINE_DOLLAR and replacement == '':
        # `$$` would open display math
        raise ReplacementContainsDelimiter(index, closer)
    if find_closer(replacement + closer, 0, closer) != len(replacement):
        raise ReplacementContainsDelimiter(index, closer)


def splice(
    segments: list[Segment],
    replacements: dict[int, str] | None = None,
    marker: DocumentMarker | None = None,
) -> str:
    """
    Reassemble a document, substituting the inner text of some math segments.

    Args:
        segments: Output of `scan`
        replacements: Segment index to new inner math text
        marker: Written as the first line when present

    Raises:
        IndexOutOfRange: an index is outside `segments` or names a prose segment
        ReplacementContainsDelimiter: a replacement would close its delimiter early
    """
    replacements = replacements or {}
    for index, replacement in replacements.items():
        if not 0 <= index < len(segments):
            raise IndexOutOfRange(index)
        segment = segments[index]
        if not segment.is_math:
            raise IndexOutOfRange(index, 'not a math segment')
        _check_replacement(index, segment.delimiter, replacement)

    parts = [marker.to_line()] if marker is not None and marker.present else []
    for index, segment in enumerate(segments):
        if index in replacements:
            parts.append(Segment.math(segment.delimiter, replacements[index]).raw)
        else:
            parts.append(segment.raw)
    return ''.join(parts)

"""
The first-line marker that guards against running zero2hero twice on a document.
"""

import re

from zero2hero.document.scanner import decode_source
from zero2hero.document.segments import DocumentMarker
from zero2hero.settings import U64_MAX
from zero2hero.utils.logger import get_logger

logger = get_logger(__name__)

MARKER_PREFIX = '% zero2hero:'

_MARKER_PATTERN = re.compile(r'% zero2hero: seed=(\d+) intensity=([0-5]) v=(\d+(?:\.\d+){1,2})\r?')


def _first_line(text: str) -> str:
    return text.split('\n', 1)[0]


def detect_marker(source: str | bytes) -> DocumentMarker:
    """
    Parse the marker from the first line of a document.

    A first line that starts like a marker but does not follow the grammar
    is reported with a warning and treated as absent.
    """
    line = _first_line(decode_source(source))
    if not line.startswith(MARKER_PREFIX):
        return DocumentMarker()

    match = _MARKER_PATTERN.fullmatch(line)
    if not match or int(match.group(1)) > U64_MAX:
        logger.warning(f'Ignoring malformed zero2hero marker: {line!r}')
        return DocumentMarker()

    return DocumentMarker(
        present=True,
        seed=int(match.group(1)),
        intensity=int(match.group(2)),
        tool_version=match.group(3),
    )


def strip_marker(source: str | bytes) -> str:
    """Remove a well-formed marker line; any other document is returned unchanged."""
    text = decode_source(source)
    if not detect_marker(text).present:
        return text
    newline = text.find('\n')
    return '' if newline < 0 else text[newline + 1 :]

"""
Document scanning: prose/math segmentation, splicing and the run marker.
"""

from zero2hero.document.marker import detect_marker, strip_marker
from zero2hero.document.scanner import scan, splice
from zero2hero.document.segments import (
    DelimiterForm,
    DocumentMarker,
    MathDelimiter,
    Segment,
    SegmentKind,
    math_segments,
)

__all__ = [
    'DelimiterForm',
    'DocumentMarker',
    'MathDelimiter',
    'Segment',
    'SegmentKind',
    'detect_marker',
    'math_segments',
    'scan',
    'splice',
    'strip_marker',
]

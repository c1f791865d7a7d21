"""
Error hierarchy. Every error that can end a command carries its exit code.
"""


class Zero2HeroError(Exception):
    """Base class for errors raised by zero2hero."""

    exit_code = 1


class DocumentError(Zero2HeroError):
    """The input document cannot be read, decoded or scanned."""

    exit_code = 2


class ConfigError(Zero2HeroError):
    """Invalid combination of options, or an invalid ZERO2HERO_* variable."""

    exit_code = 2


class MarkerPresentError(Zero2HeroError):
    """The document was already produced by zero2hero."""

    exit_code = 3


class SoundnessError(Zero2HeroError):
    """A transformed equation failed the equivalence gate. Always a bug in a pass."""

    exit_code = 4


class StructuralMismatchError(Zero2HeroError):
    """Two documents do not pair up equation by equation."""

    exit_code = 5


class AuditFailed(Zero2HeroError):
    """At least one audited equation pair is not equivalent."""

    exit_code = 1


class UnbalancedDelimiter(DocumentError):
    """A math opener has no closer before the end of input."""

    def __init__(self, opener: str, position: int):
        self.opener = opener
        self.position = position
        super().__init__(f'Unbalanced math delimiter {opener!r} opened at byte offset {position}')


class SpliceError(Zero2HeroError):
    """A replacement cannot be spliced into the document."""


class IndexOutOfRange(SpliceError):
    def __init__(self, index: int, reason: str = 'no such segment'):
        self.index = index
        super().__init__(f'Replacement index {index}: {reason}')


class ReplacementContainsDelimiter(SpliceError):
    def __init__(self, index: int, closer: str):
        self.index = index
        self.closer = closer
        super().__init__(f'Replacement for segment {index} would close its delimiter {closer!r} early')


class IllegalByte(Zero2HeroError):
    """Control character inside math. `offset` counts UTF-8 bytes from the start of the math text."""

    def __init__(self, offset: int, char: str):
        self.offset = offset
        self.char = char
        super().__init__(f'Illegal control character {char!r} at byte offset {offset}')


class BudgetExhausted(Zero2HeroError):
    """Too many verification trials had to be re-drawn."""

    def __init__(self, attempts: int, trials: int):
        self.attempts = attempts
        self.trials = trials
        super().__init__(f'Verification budget exhausted: {attempts} draws for {trials} trials')

"""
Tokenizer for the inner text of one math segment.

Tokens cover the input contiguously: whitespace and comments are tokens too,
the parser skips them.
"""

import re
from dataclasses import dataclass
from enum import Enum

from zero2hero.core.errors import IllegalByte
from zero2hero.document.scanner import byte_offset


class TokenKind(Enum):
    COMMAND = 'command'
    LBRACE = 'lbrace'
    RBRACE = 'rbrace'
    SUB = 'sub'
    SUP = 'sup'
    ALIGN = 'align'
    ROW_BREAK = 'row-break'
    NUMBER = 'number'
    LETTER = 'letter'
    OP = 'op'
    WHITESPACE = 'whitespace'
    COMMENT = 'comment'


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    text: str
    offset: int

    @property
    def name(self) -> str:
        """Command name without the backslash; the raw text for other tokens."""
        return self.text[1:] if self.kind is TokenKind.COMMAND else self.text

    def is_command(self, *names: str) -> bool:
        return self.kind is TokenKind.COMMAND and self.name in names

    def is_op(self, *chars: str) -> bool:
        return self.kind is TokenKind.OP and self.text in chars


_NUMBER = re.compile(r'\d+(?:\.\d+)?|\.\d+')
_WHITESPACE = re.compile(r'[ \t\r\n]+')
_COMMAND_WORD = re.compile(r'\\[A-Za-z]+')

_SINGLE = {
    '{': TokenKind.LBRACE,
    '}': TokenKind.RBRACE,
    '_': TokenKind.SUB,
    '^': TokenKind.SUP,
    '&': TokenKind.ALIGN,
}


def tokenize(inner: str) -> list[Token]:
    """
    Split math text into tokens.

    Raises:
        IllegalByte: a control character other than tab, CR or LF, at its UTF-8 byte offset
    """
    tokens: list[Token] = []
    i = 0
    n = len(inner)

    while i < n:
        ch = inner[i]

        if ch == '\\':
            if inner.startswith('\\\\', i):
                tokens.append(Token(TokenKind.ROW_BREAK, '\\\\', i))
                i += 2
            elif match := _COMMAND_WORD.match(inner, i):
                tokens.append(Token(TokenKind.COMMAND, match.group(), i))
                i = match.end()
            else:
                # Control symbol such as `\,` or `\{`; a trailing backslash stays a bare command
                text = inner[i : i + 2]
                tokens.append(Token(TokenKind.COMMAND, text, i))
                i += len(text)
        elif ch in _SINGLE:
            tokens.append(Token(_SINGLE[ch], ch, i))
            i += 1
        elif ch == '%':
            end = inner.find('\n', i)
            end = n if end < 0 else end + 1
            tokens.append(Token(TokenKind.COMMENT, inner[i:end], i))
            i = end
        elif match := _WHITESPACE.match(inner, i):
            tokens.append(Token(TokenKind.WHITESPACE, match.group(), i))
            i = match.end()
        elif match := _NUMBER.match(inner, i):
            tokens.append(Token(TokenKind.NUMBER, match.group(), i))
            i = match.end()
        elif ch.isalpha() and ch.isascii():
            tokens.append(Token(TokenKind.LETTER, ch, i))
            i += 1
        elif ord(ch) < 0x20 or ord(ch) == 0x7F:
            raise IllegalByte(byte_offset(inner, i), ch)
        else:
            tokens.append(Token(TokenKind.OP, ch, i))
            i += 1

    return tokens

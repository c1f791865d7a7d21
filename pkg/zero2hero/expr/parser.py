"""
Recursive-descent parser from math tokens to the expression AST.

Binding, loosest first: relations, `+`/`-`, unary sign, multiplication
(explicit, implicit and `/`, plus the prefix operators sum, product, integral
and partial derivative whose bodies run to the end of the product), powers.
`^` and `_` bind to the atom right before them.

`parse` never raises. Anything it cannot make sense of is reported as an
`Unparseable` outcome carrying the offset of the offending token.
"""

from collections.abc import Callable
from dataclasses import dataclass, replace

from zero2hero.core.errors import IllegalByte
from zero2hero.document.segments import NESTED_MATH_ENVIRONMENTS
from zero2hero.expr.nodes import (
    ACCENTS,
    DELIMITER_SIZES,
    FONTS,
    GREEK_NAMES,
    Apply,
    BigOp,
    BigOpKind,
    BinaryOperator,
    BinOp,
    BracketKind,
    Constant,
    ConstantKind,
    Expr,
    Fraction,
    Function,
    Greek,
    Group,
    Neg,
    Number,
    Opaque,
    Partial,
    Pos,
    Relation,
    RelOp,
    Row,
    Rows,
    Symbol,
    symbol_like,
)
from zero2hero.expr.precedence import canonical
from zero2hero.expr.tokenizer import Token, TokenKind, tokenize
from zero2hero.utils.logger import get_logger

logger = get_logger(__name__)

FUNCTION_NAMES = frozenset({
    'sin', 'cos', 'tan', 'cot', 'sec', 'csc', 'arcsin', 'arccos', 'arctan',
    'sinh', 'cosh', 'tanh', 'coth', 'ln', 'log', 'exp',
})  # fmt: skip

# Symbols read as uninterpreted function atoms when a parenthesis follows directly
UNINTERPRETED_HEADS = frozenset({'f', 'g', 'zeta'})

BIGOP_COMMANDS = {
    'sum': BigOpKind.SUM,
    'prod': BigOpKind.PROD,
    'int': BigOpKind.INTEGRAL,
    'oint': BigOpKind.CONTOUR_INTEGRAL,
}

RELATION_COMMANDS = {
    'leq': RelOp.LE,
    'le': RelOp.LE,
    'geq': RelOp.GE,
    'ge': RelOp.GE,
    'neq': RelOp.NE,
    'ne': RelOp.NE,
    'approx': RelOp.APPROX,
    'equiv': RelOp.EQUIV,
}
RELATION_CHARS = {'=': RelOp.EQ, '<': RelOp.LT, '>': RelOp.GT}

CONSTANT_COMMANDS = {'pi': ConstantKind.PI, 'hbar': ConstantKind.HBAR}
CONSTANT_LETTERS = {'e': ConstantKind.E, 'h': ConstantKind.H}

FRACTION_COMMANDS = frozenset({'frac', 'dfrac', 'tfrac'})
MUL_COMMANDS = frozenset({'cdot', 'times'})
ANNOTATION_COMMANDS = frozenset({'label', 'tag', 'nonumber', 'notag'})
PUNCTUATION = frozenset({',', '.', ';'})

# Layout-only commands the parser steps over
IGNORED_COMMANDS = frozenset({
    ',', ';', ':', '!', ' ', '>', 'quad', 'qquad',
    'limits', 'nolimits', 'displaystyle', 'textstyle', 'scriptstyle',
})  # fmt: skip

SIZED_COMMANDS = {
    f'{size}{side}': size for size in DELIMITER_SIZES for side in ('', 'l', 'r')
}

OPENERS = {'(': BracketKind.PAREN, '[': BracketKind.BRACKET, '|': BracketKind.VERT}
CLOSERS = {')': BracketKind.PAREN, ']': BracketKind.BRACKET, '|': BracketKind.VERT}


@dataclass(frozen=True)
class Unparseable:
    reason: str
    offset: int


@dataclass(frozen=True)
class ParseOutcome:
    result: Expr | Unparseable

    @property
    def ok(self) -> bool:
        return isinstance(self.result, Expr)

    @property
    def expr(self) -> Expr:
        if not isinstance(self.result, Expr):
            raise ValueError(f'Unparseable math: {self.result.reason} at offset {self.result.offset}')
        return self.result


class _ParseFailure(Exception):
    def __init__(self, reason: str, offset: int):
        super().__init__(reason)
        self.reason = reason
        self.offset = offset


def _delimiter_of(token: Token | None) -> BracketKind | None:
    """Bracket kind of an opening or closing delimiter token."""
    if token is None:
        return None
    if token.kind is TokenKind.OP:
        return OPENERS.get(token.text) or CLOSERS.get(token.text)
    if token.is_command('{', '}'):
        return BracketKind.BRACE
    if token.is_command('lvert', 'rvert'):
        return BracketKind.VERT
    return None


def _is_opening(token: Token | None) -> bool:
    if token is None:
        return False
    return token.is_op('(', '[', '|') or token.is_command('{', 'lvert')


def _is_closing(token: Token | None) -> bool:
    if token is None:
        return False
    return token.is_op(')', ']', '|') or token.is_command('}', 'rvert')


class Parser:
    """One-shot parser over a token list."""

    def __init__(self, tokens: list[Token]):
        self.tokens = list(tokens)
        self.source = ''.join(t.text for t in tokens)
        self.pos = 0
        self._integral_depth = 0
        self._vert_depth = 0

    # Token access

    def _skip_ignored(self):
        while self.pos < len(self.tokens):
            tok = self.tokens[self.pos]
            if tok.kind in (TokenKind.WHITESPACE, TokenKind.COMMENT) or (
                tok.kind is TokenKind.COMMAND and tok.name in IGNORED_COMMANDS
            ):
                self.pos += 1
            else:
                return

    def _peek(self, ahead: int = 0) -> Token | None:
        """The `ahead`-th significant token from the current position."""
        saved = self.pos
        try:
            self._skip_ignored()
            for _ in range(ahead):
                if self.pos >= len(self.tokens):
                    return None
                self.pos += 1
                self._skip_ignored()
            return self.tokens[self.pos] if self.pos < len(self.tokens) else None
        finally:
            self.pos = saved

    def _raw_next(self) -> Token | None:
        """The next token without skipping whitespace."""
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _advance(self) -> Token:
        self._skip_ignored()
        if self.pos >= len(self.tokens):
            raise _ParseFailure('unexpected end of math', len(self.source))
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def _offset(self) -> int:
        tok = self._peek()
        return len(self.source) if tok is None else tok.offset

    def _fail(self, reason: str):
        raise _ParseFailure(reason, self._offset())

    def _expect(self, predicate: Callable[[Token], bool], what: str) -> Token:
        tok = self._peek()
        if tok is None or not predicate(tok):
            self._fail(f'expected {what}')
        return self._advance()

    def _expect_kind(self, kind: TokenKind, what: str) -> Token:
        return self._expect(lambda t: t.kind is kind, what)

    # Stop conditions

    @staticmethod
    def _end() -> Callable[['Parser'], bool]:
        return lambda p: p._peek() is None

    @staticmethod
    def _until_kind(kind: TokenKind) -> Callable[['Parser'], bool]:
        return lambda p: (tok := p._peek()) is not None and tok.kind is kind

    @staticmethod
    def _until_op(char: str) -> Callable[['Parser'], bool]:
        return lambda p: (tok := p._peek()) is not None and tok.is_op(char)

    @staticmethod
    def _until_command(*names: str) -> Callable[['Parser'], bool]:
        return lambda p: (tok := p._peek()) is not None and tok.is_command(*names)

    @staticmethod
    def _until_sized_close(bracket: BracketKind) -> Callable[['Parser'], bool]:
        def stop(p: 'Parser') -> bool:
            tok = p._peek()
            if tok is None or not tok.is_command(*SIZED_COMMANDS):
                return False
            nxt = p._peek(1)
            return _is_closing(nxt) and _delimiter_of(nxt) is bracket

        return stop

    # Rows and relations

    def parse_rows(self, stop: Callable[['Parser'], bool]) -> Expr:
        rows: list[Row] = []
        broken = False
        while True:
            rows.append(self._parse_row(stop))
            if (tok := self._peek()) is not None and tok.kind is TokenKind.ROW_BREAK:
                self._advance()
                self._skip_row_spacing()
                broken = True
                continue
            break

        if not broken and len(rows) == 1:
            row = rows[0]
            if row.body is None and not row.annotations:
                self._fail('empty math')
            if not row.lead_align and not row.trailing and not row.annotations:
                return row.body
        return Rows(tuple(rows))

    def _skip_row_spacing(self):
        # `\\[2pt]`
        if (tok := self._raw_next()) is not None and tok.is_op('['):
            while (tok := self._raw_next()) is not None and not tok.is_op(']'):
                self.pos += 1
            if tok is None:
                self._fail('unterminated row spacing')
            self.pos += 1

    def _at_row_end(self, stop: Callable[['Parser'], bool]) -> bool:
        tok = self._peek()
        return tok is None or tok.kind is TokenKind.ROW_BREAK or stop(self)

    def _collect_layout(self, annotations: list[str], trailing: list[str] | None = None):
        while (tok := self._peek()) is not None:
            if tok.kind is TokenKind.COMMAND and tok.name in ANNOTATION_COMMANDS:
                annotations.append(self._annotation())
            elif trailing is not None and tok.kind is TokenKind.OP and tok.text in PUNCTUATION and not trailing:
                trailing.append(self._advance().text)
            else:
                return

    def _annotation(self) -> str:
        tok = self._advance()
        if tok.is_command('label', 'tag'):
            if (star := self._raw_next()) is not None and star.is_op('*'):
                self.pos += 1
            self._skip_ignored()
            if (arg := self._raw_next()) is None or arg.kind is not TokenKind.LBRACE:
                self._fail('annotation without argument')
            self._skip_braced()
        return self.source[tok.offset : self._end_offset()]

    def _end_offset(self) -> int:
        if self.pos == 0:
            return 0
        last = self.tokens[self.pos - 1]
        return last.offset + len(last.text)

    def _parse_row(self, stop: Callable[['Parser'], bool]) -> Row:
        annotations: list[str] = []
        trailing: list[str] = []
        self._collect_layout(annotations)
        lead_align = False
        if (tok := self._peek()) is not None and tok.kind is TokenKind.ALIGN:
            nxt = self._peek(1)
            if nxt is None or self._relation_op(nxt) is None:
                self._advance()
                lead_align = True

        body = self._parse_relation(stop)
        self._collect_layout(annotations, trailing)
        if not self._at_row_end(stop):
            self._fail('unexpected token')
        return Row(body, lead_align, ''.join(trailing), tuple(annotations))

    @staticmethod
    def _relation_op(tok: Token | None) -> RelOp | None:
        if tok is None:
            return None
        if tok.kind is TokenKind.OP:
            return RELATION_CHARS.get(tok.text)
        if tok.kind is TokenKind.COMMAND:
            return RELATION_COMMANDS.get(tok.name)
        return None

    def _part_missing(self, stop: Callable[['Parser'], bool]) -> bool:
        tok = self._peek()
        if self._at_row_end(stop) or self._relation_op(tok) is not None:
            return True
        if tok.kind is TokenKind.ALIGN:
            return True
        return (tok.kind is TokenKind.OP and tok.text in PUNCTUATION) or (
            tok.kind is TokenKind.COMMAND and tok.name in ANNOTATION_COMMANDS
        )

    def _parse_relation(self, stop: Callable[['Parser'], bool]) -> Expr | None:
        first = None if self._part_missing(stop) else self.parse_expr()
        parts: list[Expr | None] = [first]
        ops: list[RelOp] = []
        aligned: list[bool] = []

        while True:
            is_aligned = False
            tok = self._peek()
            if tok is not None and tok.kind is TokenKind.ALIGN and self._relation_op(self._peek(1)) is not None:
                self._advance()
                is_aligned = True
            op = self._relation_op(self._peek())
            if op is None:
                break
            self._advance()
            ops.append(op)
            aligned.append(is_aligned)
            parts.append(None if self._part_missing(stop) else self.parse_expr())

        if not ops:
            return first
        return Relation(tuple(parts), tuple(ops), tuple(aligned))

    # Sums, signs and products

    def parse_expr(self) -> Expr:
        left = self._parse_signed()
        while (tok := self._peek()) is not None and tok.is_op('+', '-'):
            op = BinaryOperator.ADD if self._advance().text == '+' else BinaryOperator.SUB
            left = BinOp(op, left, self._parse_signed())
        return left

    def _parse_signed(self) -> Expr:
        tok = self._peek()
        if tok is not None and tok.is_op('-'):
            self._advance()
            return Neg(self._parse_signed())
        if tok is not None and tok.is_op('+'):
            self._advance()
            return Pos(self._parse_signed())
        return self.parse_term()

    def parse_term(self) -> Expr:
        left = self._parse_factor()
        while (tok := self._peek()) is not None:
            if tok.is_command(*MUL_COMMANDS) or tok.is_op('*'):
                self._advance()
                left = BinOp(BinaryOperator.MUL, left, self._parse_factor())
            elif tok.is_op('/'):
                self._advance()
                left = BinOp(BinaryOperator.DIV, left, self._parse_factor())
            elif self._integral_depth and self._at_differential():
                break
            elif self._starts_factor(tok):
                left = BinOp(BinaryOperator.IMPLICIT_MUL, left, self._parse_factor())
            else:
                break
        return left

    def _starts_factor(self, tok: Token) -> bool:
        match tok.kind:
            case TokenKind.NUMBER | TokenKind.LETTER | TokenKind.LBRACE:
                return True
            case TokenKind.OP:
                if tok.text == '|':
                    return self._vert_depth == 0
                return tok.text in ('(', '[')
            case TokenKind.COMMAND:
                name = tok.name
                if name in SIZED_COMMANDS:
                    if name.endswith('r'):
                        return False
                    nxt = self._peek(1)
                    if nxt is not None and (nxt.is_op('|') or nxt.is_command('lvert')):
                        return self._vert_depth == 0
                    return _is_opening(nxt)
                if name == 'lvert':
                    return self._vert_depth == 0
                return not (
                    name in RELATION_COMMANDS
                    or name in MUL_COMMANDS
                    or name in ANNOTATION_COMMANDS
                    or name in ('right', 'end', '}', 'rvert')
                )
            case _:
                return False

    def _at_differential(self) -> bool:
        tok = self._peek()
        if tok is None:
            return False
        if tok.kind is TokenKind.LETTER and tok.text == 'd':
            nxt = self._peek(1)
        elif tok.is_command('mathrm') and self._mathrm_d():
            nxt = self._peek(4)
        else:
            return False
        return nxt is not None and (
            nxt.kind is TokenKind.LETTER or (nxt.kind is TokenKind.COMMAND and nxt.name in GREEK_NAMES)
        )

    def _mathrm_d(self) -> bool:
        brace, letter, close = self._peek(1), self._peek(2), self._peek(3)
        return (
            brace is not None
            and brace.kind is TokenKind.LBRACE
            and letter is not None
            and letter.text == 'd'
            and close is not None
            and close.kind is TokenKind.RBRACE
        )

    # Factors

    def _parse_factor(self) -> Expr:
        tok = self._peek()
        if tok is None:
            self._fail('missing operand')

        match tok.kind:
            case TokenKind.OP if tok.text == '-':
                self._advance()
                return Neg(self._parse_factor())
            case TokenKind.NUMBER:
                self._advance()
                return self._scripts(Number(tok.text))
            case TokenKind.LETTER:
                self._advance()
                return self._after_name(self._letter(tok.text))
            case TokenKind.LBRACE:
                self._advance()
                inner = self._nested(self._until_kind(TokenKind.RBRACE))
                self._expect_kind(TokenKind.RBRACE, '}')
                return self._scripts(Group(inner, BracketKind.INVISIBLE, None))
            case TokenKind.OP if tok.text in ('(', '['):
                self._advance()
                bracket = OPENERS[tok.text]
                inner = self._nested(self._until_op(')' if bracket is BracketKind.PAREN else ']'))
                self._advance()
                return self._scripts(Group(inner, bracket, None))
            case TokenKind.OP if tok.text == '|':
                self._advance()
                inner = self._nested(self._until_op('|'), vert=True)
                self._expect(lambda t: t.is_op('|'), '|')
                return self._scripts(Group(inner, BracketKind.VERT, None))
            case TokenKind.COMMAND:
                return self._command()
            case _:
                self._fail(f'unexpected {tok.text!r}')

    def _nested(self, stop: Callable[['Parser'], bool], vert: bool = False) -> Expr:
        """Parse bracketed content; differentials and `|` closers belong to the outside."""
        saved = self._integral_depth, self._vert_depth
        self._integral_depth = 0
        self._vert_depth = 1 if vert else 0
        try:
            inner = self.parse_rows(stop)
        finally:
            self._integral_depth, self._vert_depth = saved
        if not stop(self):
            self._fail('unbalanced bracket')
        return inner

    @staticmethod
    def _letter(text: str) -> Expr:
        if text in CONSTANT_LETTERS:
            return Constant(CONSTANT_LETTERS[text])
        return Symbol(text)

    def _after_name(self, atom: Expr) -> Expr:
        """Scripts of a name, then an uninterpreted application if a parenthesis follows directly."""
        atom = self._scripts(atom, allow_sup=False)
        if symbol_like(atom) and atom.name in UNINTERPRETED_HEADS and self._call_follows():
            atom = self._application(atom)
        return self._scripts(atom)

    def _call_follows(self) -> bool:
        tok = self._raw_next()
        if tok is None:
            return False
        if tok.is_op('('):
            return True
        if tok.is_command('left', *SIZED_COMMANDS):
            nxt = self.tokens[self.pos + 1] if self.pos + 1 < len(self.tokens) else None
            return nxt is not None and nxt.is_op('(')
        return False

    def _application(self, head: Expr) -> Apply:
        tok = self._advance()
        if tok.is_op('('):
            closer = self._until_op(')')
        elif tok.is_command('left'):
            self._advance()
            closer = self._until_command('right')
        else:
            self._advance()
            closer = self._until_sized_close(BracketKind.PAREN)

        saved = self._integral_depth
        self._integral_depth = 0
        try:
            args = [self.parse_expr()]
            while (nxt := self._peek()) is not None and nxt.is_op(','):
                self._advance()
                args.append(self.parse_expr())
        finally:
            self._integral_depth = saved

        if not closer(self):
            self._fail('unterminated argument list')
        if not tok.is_op('('):
            self._advance()
        self._expect(lambda t: t.is_op(')'), ')')
        return Apply(head, tuple(args))

    # Scripts

    def _script_token(self) -> Token | None:
        tok = self._peek()
        if tok is not None and tok.kind in (TokenKind.SUB, TokenKind.SUP):
            return tok
        return None

    def _scripts(self, atom: Expr, allow_sup: bool = True) -> Expr:
        sub = sup = None
        while (tok := self._script_token()) is not None:
            if tok.kind is TokenKind.SUP and not allow_sup:
                break
            self._advance()
            if tok.kind is TokenKind.SUB:
                if sub is not None:
                    raise _ParseFailure('double subscript', tok.offset)
                sub = self._subscript_argument()
            else:
                if sup is not None:
                    raise _ParseFailure('double superscript', tok.offset)
                sup = self._script_argument()

        if sub is not None:
            atom = self._with_subscript(atom, sub, sub_offset=self._offset())
        if sup is not None:
            if isinstance(atom, Constant) and atom.kind is ConstantKind.E:
                return Function('exp', (sup,))
            return BinOp(BinaryOperator.POW, atom, sup)
        return atom

    def _with_subscript(self, atom: Expr, sub: Expr, sub_offset: int) -> Expr:
        if isinstance(atom, Constant) and atom.kind in (ConstantKind.E, ConstantKind.H):
            return Symbol(atom.kind.value, sub=sub)
        if isinstance(atom, Symbol | Greek) and atom.sub is None:
            return replace(atom, sub=sub)
        raise _ParseFailure('subscript on a non-symbol', sub_offset)

    def _script_argument(self) -> Expr:
        tok = self._peek()
        if tok is None:
            self._fail('dangling script')
        match tok.kind:
            case TokenKind.LBRACE:
                self._advance()
                inner = self._nested(self._until_kind(TokenKind.RBRACE))
                self._advance()
                return inner
            case TokenKind.NUMBER:
                return self._first_digit()
            case TokenKind.LETTER:
                self._advance()
                return self._letter(tok.text)
            case TokenKind.COMMAND if tok.name in GREEK_NAMES:
                self._advance()
                return Greek(tok.name)
            case TokenKind.COMMAND if tok.name in CONSTANT_COMMANDS:
                self._advance()
                return Constant(CONSTANT_COMMANDS[tok.name])
            case _:
                self._fail('dangling script')

    def _subscript_argument(self) -> Expr:
        """Like a script argument, but content that does not parse is kept verbatim."""
        tok = self._peek()
        if tok is None or tok.kind is not TokenKind.LBRACE:
            return self._script_argument()
        saved = self.pos
        try:
            return self._script_argument()
        except _ParseFailure:
            self.pos = saved
            self._skip_ignored()
            start = self.tokens[self.pos].offset + 1
            self._skip_braced()
            return Opaque(self.source[start : self._end_offset() - 1])

    def _first_digit(self) -> Number:
        """Unbraced scripts and fraction arguments take a single digit, as TeX does."""
        self._skip_ignored()
        tok = self.tokens[self.pos]
        if len(tok.text) == 1 or not tok.text[0].isdigit():
            self.pos += 1
            return Number(tok.text)
        self.tokens[self.pos] = Token(TokenKind.NUMBER, tok.text[1:], tok.offset + 1)
        return Number(tok.text[0])

    def _skip_braced(self):
        """Consume a balanced `{...}` starting at the current raw token."""
        depth = 0
        while self.pos < len(self.tokens):
            tok = self.tokens[self.pos]
            self.pos += 1
            if tok.kind is TokenKind.LBRACE:
                depth += 1
            elif tok.kind is TokenKind.RBRACE:
                depth -= 1
                if depth == 0:
                    return
        self._fail('unbalanced braces')

    # Commands

    def _command(self) -> Expr:
        tok = self._peek()
        name = tok.name

        if name in GREEK_NAMES:
            self._advance()
            return self._after_name(Greek(name))
        if name in CONSTANT_COMMANDS:
            self._advance()
            return self._scripts(Constant(CONSTANT_COMMANDS[name]))
        if name in FRACTION_COMMANDS:
            return self._scripts(self._fraction())
        if name == 'sqrt':
            return self._scripts(self._sqrt())
        if name in FUNCTION_NAMES:
            return self._function()
        if name in BIGOP_COMMANDS:
            return self._bigop()
        if name == 'left':
            return self._scripts(self._left_group())
        if name in SIZED_COMMANDS and self._starts_factor(tok):
            return self._scripts(self._sized_group())
        if name in ('{', 'lvert'):
            return self._scripts(self._command_group())
        if name in ACCENTS:
            return self._fallback(self._accented)
        if name in FONTS:
            return self._fallback(self._font_symbol)
        if name == 'begin':
            return self._scripts(self._environment())
        if name in ANNOTATION_COMMANDS:
            self._fail(f'{tok.text} inside an expression')
        if name in MUL_COMMANDS or name in RELATION_COMMANDS:
            self._fail(f'operator {tok.text} without left operand')
        if name in ('right', 'end', '}', 'rvert') or name in SIZED_COMMANDS:
            self._fail(f'unexpected {tok.text}')
        return self._opaque()

    def _fallback(self, build: Callable[[], Expr]) -> Expr:
        """Try a structured reading of the command at point; keep it verbatim if that fails."""
        saved = self.pos
        try:
            return build()
        except _ParseFailure:
            self.pos = saved
            return self._opaque()

    def _accented(self) -> Expr:
        accent = self._advance().name
        tok = self._peek()
        if tok is not None and tok.kind is TokenKind.LBRACE:
            self._advance()
            base = self._nested(self._until_kind(TokenKind.RBRACE))
            self._advance()
        else:
            base = self._script_argument()
        if isinstance(base, Constant) and base.kind in (ConstantKind.E, ConstantKind.H):
            base = Symbol(base.kind.value)
        if not symbol_like(base) or base.accent is not None:
            self._fail('accent on a non-symbol')
        return self._after_name(replace(base, accent=accent))

    def _font_symbol(self) -> Expr:
        font = self._advance().name
        if (tok := self._peek()) is not None and tok.kind is TokenKind.LETTER:
            return self._after_name(Symbol(self._advance().text, font=font))
        self._expect_kind(TokenKind.LBRACE, '{')
        letter = self._expect_kind(TokenKind.LETTER, 'a letter')
        self._expect_kind(TokenKind.RBRACE, '}')
        return self._after_name(Symbol(letter.text, font=font))

    def _opaque(self) -> Opaque:
        head = self._advance()
        start = head.offset
        # Accents and fonts that did not read as a symbol keep their braced argument
        if head.name in ACCENTS or head.name in FONTS:
            self._skip_ignored()
            if (tok := self._raw_next()) is None or tok.kind is not TokenKind.LBRACE:
                self._fail(f'{head.text} without argument')
        if (tok := self._raw_next()) is not None and tok.is_op('['):
            depth = 0
            while (tok := self._raw_next()) is not None:
                self.pos += 1
                if tok.is_op('['):
                    depth += 1
                elif tok.is_op(']'):
                    depth -= 1
                    if depth == 0:
                        break
            if depth:
                self._fail('unterminated optional argument')
        while (tok := self._raw_next()) is not None and tok.kind is TokenKind.LBRACE:
            self._skip_braced()
        while (tok := self._script_token()) is not None:
            self._advance()
            self._skip_ignored()
            if (arg := self._raw_next()) is None:
                self._fail('dangling script')
            if arg.kind is TokenKind.LBRACE:
                self._skip_braced()
            else:
                self.pos += 1
        return Opaque(self.source[start : self._end_offset()])

    def _brace_argument(self) -> Expr:
        tok = self._peek()
        if tok is not None and tok.kind is TokenKind.LBRACE:
            self._advance()
            inner = self._nested(self._until_kind(TokenKind.RBRACE))
            self._advance()
            return inner
        return self._script_argument()

    def _fraction(self) -> Expr:
        self._advance()
        saved = self.pos
        tok, nxt = self._peek(), self._peek(1)
        if tok is not None and tok.kind is TokenKind.LBRACE and nxt is not None and nxt.is_command('partial'):
            try:
                return self._partial()
            except _ParseFailure:
                self.pos = saved
        numerator = self._brace_argument()
        denominator = self._brace_argument()
        return Fraction(numerator, denominator)

    def _derivative_order(self) -> int:
        if self._script_token() is None or self._script_token().kind is not TokenKind.SUP:
            return 1
        self._advance()
        order = self._script_argument()
        if not isinstance(order, Number) or not order.text.isdigit() or int(order.text) < 1:
            self._fail('derivative order must be a positive integer')
        return int(order.text)

    def _partial(self) -> Partial:
        self._advance()  # {
        self._advance()  # \partial
        order = self._derivative_order()
        operand = None
        if (tok := self._peek()) is None or tok.kind is not TokenKind.RBRACE:
            operand = self._nested(self._until_kind(TokenKind.RBRACE))
        self._expect_kind(TokenKind.RBRACE, '}')

        self._expect_kind(TokenKind.LBRACE, '{')
        self._expect(lambda t: t.is_command('partial'), '\\partial')
        wrt = self._differential_variable()
        if self._derivative_order() != order:
            self._fail('derivative orders differ')
        self._expect_kind(TokenKind.RBRACE, '}')

        if operand is None:
            operand = self.parse_term()
        return Partial(order, wrt, operand)

    def _differential_variable(self) -> Expr:
        """A symbol with an optional subscript; no superscript."""
        tok = self._peek()
        if tok is None:
            self._fail('missing variable')
        if tok.kind is TokenKind.LETTER:
            self._advance()
            var = Symbol(tok.text)
        elif tok.kind is TokenKind.COMMAND and tok.name in GREEK_NAMES:
            self._advance()
            var = Greek(tok.name)
        elif tok.kind is TokenKind.COMMAND and tok.name in FONTS:
            var = self._font_symbol_plain()
        else:
            self._fail('expected a variable')
        if (script := self._script_token()) is not None and script.kind is TokenKind.SUB:
            self._advance()
            var = replace(var, sub=self._subscript_argument())
        return var

    def _font_symbol_plain(self) -> Symbol:
        font = self._advance().name
        self._expect_kind(TokenKind.LBRACE, '{')
        letter = self._expect_kind(TokenKind.LETTER, 'a letter')
        self._expect_kind(TokenKind.RBRACE, '}')
        return Symbol(letter.text, font=font)

    def _sqrt(self) -> Function:
        self._advance()
        degree = None
        if (tok := self._raw_next()) is not None and tok.is_op('['):
            self.pos += 1
            degree = self._nested(self._until_op(']'))
            self._advance()
        radicand = self._brace_argument()
        return Function('sqrt', (radicand,)) if degree is None else Function('root', (radicand, degree))

    def _function(self) -> Expr:
        name = self._advance().name
        power = base = None
        while (tok := self._script_token()) is not None:
            if tok.kind is TokenKind.SUP and power is None:
                self._advance()
                power = self._script_argument()
            elif tok.kind is TokenKind.SUB and name == 'log' and base is None:
                self._advance()
                base = self._script_argument()
            else:
                self._fail('misplaced script on a function')

        tok = self._peek()
        if tok is not None and (tok.is_op('(') or tok.is_command('left') or tok.is_command(*SIZED_COMMANDS)):
            arg = self._parse_factor()
            if isinstance(arg, Group) and arg.bracket is BracketKind.PAREN:
                arg = arg.inner
        else:
            arg = self._parse_factor()

        fn = Function(name, (arg,) if base is None else (arg, base))
        if power is not None:
            return BinOp(BinaryOperator.POW, fn, power)
        return fn

    def _bigop(self) -> BigOp:
        kind = BIGOP_COMMANDS[self._advance().name]
        lower = upper = None
        while (tok := self._script_token()) is not None:
            self._advance()
            if tok.kind is TokenKind.SUB and lower is None:
                lower = self._script_argument()
            elif tok.kind is TokenKind.SUP and upper is None:
                upper = self._script_argument()
            else:
                raise _ParseFailure('double bound', tok.offset)

        bound_var = None
        if not kind.is_integral:
            if isinstance(lower, Relation) and lower.ops == (RelOp.EQ,) and symbol_like(lower.parts[0]):
                if lower.parts[1] is None:
                    self._fail('empty lower bound')
                bound_var, lower = lower.parts
            elif symbol_like(lower):
                bound_var, lower = lower, None

        if kind.is_integral:
            self._integral_depth += 1
        try:
            body = self.parse_term()
        finally:
            if kind.is_integral:
                self._integral_depth -= 1

        differential = None
        if kind.is_integral:
            if not self._at_differential():
                self._fail('integral without differential')
            if self._advance().is_command('mathrm'):
                self._advance()
                self._advance()
                self._advance()
            differential = self._differential_variable()
        return BigOp(kind, bound_var, lower, upper, body, differential)

    # Groups

    def _closing_delimiter(self, bracket: BracketKind):
        tok = self._advance()
        if _delimiter_of(tok) is not bracket or not _is_closing(tok):
            raise _ParseFailure('mismatched delimiter', tok.offset)

    def _left_group(self) -> Group:
        self._advance()
        tok = self._advance()
        bracket = _delimiter_of(tok)
        if bracket is None or not _is_opening(tok):
            raise _ParseFailure('unsupported \\left delimiter', tok.offset)
        inner = self._nested(self._until_command('right'))
        self._advance()
        self._closing_delimiter(bracket)
        return Group(inner, bracket, 'left')

    def _sized_group(self) -> Group:
        size = SIZED_COMMANDS[self._advance().name]
        tok = self._advance()
        bracket = _delimiter_of(tok)
        inner = self._nested(self._until_sized_close(bracket), vert=bracket is BracketKind.VERT)
        self._advance()
        self._closing_delimiter(bracket)
        return Group(inner, bracket, size)

    def _command_group(self) -> Group:
        tok = self._advance()
        if tok.is_command('{'):
            inner = self._nested(self._until_command('}'))
            self._advance()
            return Group(inner, BracketKind.BRACE, None)
        inner = self._nested(self._until_command('rvert'), vert=True)
        self._advance()
        return Group(inner, BracketKind.VERT, None)

    def _environment(self) -> Rows:
        self._advance()
        name = self._environment_name()
        if name not in NESTED_MATH_ENVIRONMENTS:
            self._fail(f'unsupported environment {name!r}')
        inner = self._nested(self._until_command('end'))
        self._advance()
        if self._environment_name() != name:
            self._fail(f'environment {name!r} closed by a different name')
        if isinstance(inner, Rows):
            return replace(inner, env=name)
        return Rows((Row(inner),), env=name)

    def _environment_name(self) -> str:
        self._expect_kind(TokenKind.LBRACE, '{')
        start = self.tokens[self.pos - 1].offset + 1
        while (tok := self._raw_next()) is not None and tok.kind is not TokenKind.RBRACE:
            self.pos += 1
        self._expect_kind(TokenKind.RBRACE, '}')
        return self.source[start : self.tokens[self.pos - 1].offset].strip()

    # Entry point

    def parse(self) -> Expr:
        expr = self.parse_rows(self._end())
        if self._peek() is not None:
            self._fail('trailing input')
        return expr


def parse(tokens: list[Token]) -> ParseOutcome:
    """
    Parse math tokens into a canonical expression.

    Never raises: malformed input yields an `Unparseable` result.
    """
    try:
        return ParseOutcome(canonical(Parser(tokens).parse()))
    except _ParseFailure as e:
        return ParseOutcome(Unparseable(e.reason, e.offset))
    except RecursionError:
        return ParseOutcome(Unparseable('expression nested too deeply', 0))


def parse_math(inner: str) -> ParseOutcome:
    """Tokenize and parse the inner text of a math segment."""
    try:
        tokens = tokenize(inner)
    except IllegalByte as e:
        return ParseOutcome(Unparseable(str(e), e.offset))
    outcome = parse(tokens)
    if not outcome.ok:
        logger.debug(f'Unparseable math: {outcome.result.reason} at offset {outcome.result.offset}')
    return outcome

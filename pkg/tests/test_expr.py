"""
Tests for the math tokenizer, parser, canonical grouping and emitter.
"""

import numpy as np
import pytest

from zero2hero.core.errors import IllegalByte
from zero2hero.expr import (
    Apply,
    BigOp,
    BigOpKind,
    BinaryOperator,
    BinOp,
    BracketKind,
    Constant,
    ConstantKind,
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
    Rows,
    Symbol,
    TokenKind,
    canonical,
    emit,
    parse,
    parse_math,
    tokenize,
    walk,
)


pytestmark = pytest.mark.unit


def kinds(text: str) -> list[tuple[TokenKind, str]]:
    return [(t.kind, t.text) for t in tokenize(text) if t.kind is not TokenKind.WHITESPACE]


def count(e, node_type, **attrs) -> int:
    return sum(
        1
        for node in walk(e)
        if isinstance(node, node_type) and all(getattr(node, key) == value for key, value in attrs.items())
    )


class TestTokenize:
    """Test math tokenization."""

    def test_simple_sum(self):
        """Test letters, operators and numbers."""
        assert kinds('x+1') == [(TokenKind.LETTER, 'x'), (TokenKind.OP, '+'), (TokenKind.NUMBER, '1')]

    def test_fraction(self):
        """Test commands and braces."""
        assert kinds('\\frac{a}{b}') == [
            (TokenKind.COMMAND, '\\frac'),
            (TokenKind.LBRACE, '{'),
            (TokenKind.LETTER, 'a'),
            (TokenKind.RBRACE, '}'),
            (TokenKind.LBRACE, '{'),
            (TokenKind.LETTER, 'b'),
            (TokenKind.RBRACE, '}'),
        ]

    def test_contour_subscript(self):
        """Test a subscripted big operator."""
        assert kinds('\\oint_{\\Omega}') == [
            (TokenKind.COMMAND, '\\oint'),
            (TokenKind.SUB, '_'),
            (TokenKind.LBRACE, '{'),
            (TokenKind.COMMAND, '\\Omega'),
            (TokenKind.RBRACE, '}'),
        ]

    def test_layout_tokens(self):
        """Test alignment markers and row breaks."""
        assert [t.kind for t in tokenize('a&=b\\\\c')] == [
            TokenKind.LETTER,
            TokenKind.ALIGN,
            TokenKind.OP,
            TokenKind.LETTER,
            TokenKind.ROW_BREAK,
            TokenKind.LETTER,
        ]

    def test_tokens_are_contiguous(self, loss_equation):
        """Test that tokens cover the input without gaps."""
        tokens = tokenize(loss_equation)

        assert ''.join(t.text for t in tokens) == loss_equation
        assert all(a.offset + len(a.text) == b.offset for a, b in zip(tokens, tokens[1:]))

    def test_decimal_number(self):
        """Test that decimals are one token kept as written."""
        assert kinds('2.50') == [(TokenKind.NUMBER, '2.50')]

    def test_control_character(self):
        """Test that control characters are rejected with their offset."""
        with pytest.raises(IllegalByte) as exc:
            tokenize('x\x01')

        assert exc.value.offset == 1

    def test_control_character_after_non_ascii(self):
        """Test that the offset counts UTF-8 bytes, not characters."""
        with pytest.raises(IllegalByte) as exc:
            tokenize('é + ∞\x01')

        assert exc.value.offset == len('é + ∞'.encode('utf-8'))
        assert exc.value.offset == 8
        assert parse_math('é + ∞\x01').result.offset == 8


class TestParse:
    """Test parsing into the AST."""

    def test_symbol(self, parse):
        """Test a single letter."""
        assert parse('x') == Symbol('x')

    def test_unit_sum(self, parse):
        """Test a sum with index and bounds."""
        assert parse('\\sum_{k=1}^{1} x') == BigOp(BigOpKind.SUM, Symbol('k'), Number('1'), Number('1'), Symbol('x'))

    def test_precedence(self, parse):
        """Test that powers bind tighter than products, products tighter than sums."""
        assert parse('a + b c^{2}') == BinOp(
            BinaryOperator.ADD,
            Symbol('a'),
            BinOp(BinaryOperator.IMPLICIT_MUL, Symbol('b'), BinOp(BinaryOperator.POW, Symbol('c'), Number('2'))),
        )

    def test_implicit_product_is_left_associative(self, parse):
        """Test that juxtaposition chains to the left."""
        assert parse('m c d') == BinOp(
            BinaryOperator.IMPLICIT_MUL,
            BinOp(BinaryOperator.IMPLICIT_MUL, Symbol('m'), Symbol('c')),
            Symbol('d'),
        )

    def test_unbraced_script_takes_one_digit(self, parse):
        """Test that x^23 is x squared times three."""
        assert parse('x^23') == BinOp(
            BinaryOperator.IMPLICIT_MUL, BinOp(BinaryOperator.POW, Symbol('x'), Number('2')), Number('3')
        )

    def test_constants(self, parse):
        """Test that bare e, h, pi and hbar are constants."""
        assert parse('h') == Constant(ConstantKind.H)
        assert parse('\\hbar') == Constant(ConstantKind.HBAR)
        assert parse('\\pi') == Constant(ConstantKind.PI)
        assert parse('e') == Constant(ConstantKind.E)

    def test_subscripted_e_is_a_symbol(self, parse):
        """Test that e_1 names a variable."""
        assert parse('e_{1}') == Symbol('e', sub=Number('1'))

    def test_exponential_normalises(self, parse):
        """Test that e^{x} and exp both become the exp function."""
        assert parse('e^{x}') == Function('exp', (Symbol('x'),))
        assert parse('\\exp\\left( x \\right)') == Function('exp', (Symbol('x'),))

    def test_function_power_notation(self, parse):
        """Test sin^2 x."""
        assert parse('\\sin^{2} x') == BinOp(BinaryOperator.POW, Function('sin', (Symbol('x'),)), Number('2'))

    def test_function_parenthesised_argument(self, parse):
        """Test that the argument's own parentheses are dropped."""
        assert parse('\\sin(0.7)') == Function('sin', (Number('0.7'),))

    def test_log_with_base(self, parse):
        """Test the two-argument logarithm."""
        assert parse('\\log_{2} x') == Function('log', (Symbol('x'), Number('2')))

    def test_roots(self, parse):
        """Test square and n-th roots."""
        assert parse('\\sqrt{x}') == Function('sqrt', (Symbol('x'),))
        assert parse('\\sqrt[3]{x}') == Function('root', (Symbol('x'), Number('3')))

    def test_relation(self, parse):
        """Test that relations keep every side."""
        e = parse('E = mc^{2}')

        assert isinstance(e, Relation)
        assert e.ops == (RelOp.EQ,)
        assert e.parts[0] == Symbol('E')

    def test_aligned_rows(self, parse):
        """Test rows with alignment markers."""
        e = parse('a &= b \\\\ &= c')

        assert isinstance(e, Rows)
        assert len(e.rows) == 2
        assert e.rows[1].body.parts[0] is None
        assert e.rows[1].body.aligned == (True,)

    def test_leading_plus(self, parse):
        """Test continuation rows starting with a plus."""
        e = parse('&+ \\frac{1}{2} x')

        assert isinstance(e, Rows)
        assert isinstance(e.rows[0].body, Pos)
        assert e.rows[0].lead_align

    def test_annotations_and_punctuation(self, parse):
        """Test that labels and trailing punctuation are row layout."""
        e = parse('x = 1, \\label{eq:one}')

        row = e.rows[0]
        assert row.trailing == ','
        assert row.annotations == ('\\label{eq:one}',)
        assert emit(e) == 'x = 1, \\label{eq:one}'

    def test_font_symbol(self, parse):
        """Test that \\mathcal{L} is a symbol."""
        assert parse('\\mathcal{L}') == Symbol('L', font='mathcal')

    def test_accented_subscripted_symbol(self, parse):
        """Test that \\hat{y_i} is one symbol."""
        assert parse('\\hat{y_i}') == Symbol('y', sub=Symbol('i'), accent='hat')

    def test_uninterpreted_application(self, parse):
        """Test that f(x) applies f while a space makes a product."""
        assert parse('f(x)') == Apply(Symbol('f'), (Symbol('x'),))
        assert isinstance(parse('a (x)'), BinOp)

    def test_partial_operator_form(self, parse):
        """Test d/dx written as an operator."""
        assert parse('\\frac{\\partial}{\\partial x} y') == Partial(1, Symbol('x'), Symbol('y'))

    def test_partial_quotient_form(self, parse):
        """Test the quotient form with a higher order."""
        e = parse('\\frac{\\partial^2 y}{\\partial x^2}')

        assert e == Partial(2, Symbol('x'), Symbol('y'))
        assert emit(e) == '\\frac{\\partial^{2}}{\\partial x^{2}} y'

    def test_integral_differential(self, parse):
        """Test that the integrand stops at the differential."""
        e = parse('\\int_{0}^{1} x \\, d\\tau')

        assert e == BigOp(BigOpKind.INTEGRAL, None, Number('0'), Number('1'), Symbol('x'), Greek('tau'))

    def test_unknown_command_is_opaque(self, parse):
        """Test that unknown commands keep their arguments byte for byte."""
        e = parse('\\mycmd{a}{b} + x')

        assert count(e, Opaque, raw='\\mycmd{a}{b}') == 1
        assert '\\mycmd{a}{b}' in emit(e)

    def test_sized_group_spanning_rows(self, parse):
        """Test a \\Bigg bracket opened on one row and closed on the next."""
        e = parse('\\Bigg[ a \\\\ + b \\Bigg]')

        group = next(node for node in walk(e) if isinstance(node, Group))
        assert group.size == 'Bigg'
        assert group.bracket is BracketKind.BRACKET
        assert isinstance(group.inner, Rows)

    @pytest.mark.parametrize('text', ['\\frac{a}{', 'x^', '\\left( x', '}', '', '\\begin{foo} x \\end{foo}'])
    def test_unparseable(self, text):
        """Test that malformed math is reported, never raised."""
        outcome = parse_math(text)

        assert not outcome.ok
        assert outcome.result.reason

    def test_illegal_byte_is_unparseable(self):
        """Test that tokenizer errors fold into the outcome."""
        assert not parse_math('x\x02').ok

    def test_random_tokens_never_raise(self):
        """Test parser totality on random token soup."""
        alphabet = ['x', '+', '-', '{', '}', '^', '_', '\\frac', '\\left(', '\\right)', '&', '\\\\', '2', '\\sum', ' ']
        rng = np.random.default_rng(3)
        for _ in range(500):
            text = ''.join(alphabet[int(i)] for i in rng.integers(len(alphabet), size=int(rng.integers(1, 15))))
            outcome = parse(tokenize(text))
            assert outcome.ok or outcome.result.offset >= 0


class TestLossEquation:
    """Test the multi-row loss equation fixture."""

    def test_structure(self, loss_expr):
        """Test the operator counts of the loss."""
        assert count(loss_expr, BigOp, kind=BigOpKind.CONTOUR_INTEGRAL) >= 1
        assert count(loss_expr, BigOp, kind=BigOpKind.SUM) >= 2
        assert count(loss_expr, Partial) >= 1
        assert len({node.name for node in walk(loss_expr) if isinstance(node, Greek)}) >= 3

    def test_no_opaque_fallback(self, loss_expr):
        """Test that every command of the loss is understood."""
        assert count(loss_expr, Opaque) == 0

    def test_odds_fraction(self, loss_expr):
        """Test the y-hat over one minus y-hat fraction."""
        y_hat = Symbol('y', sub=Symbol('i'), accent='hat')
        odds = Fraction(y_hat, BinOp(BinaryOperator.SUB, Number('1'), y_hat))

        assert count(loss_expr, Fraction, numerator=odds.numerator, denominator=odds.denominator) >= 1

    def test_uninterpreted_heads(self, loss_expr):
        """Test that zeta and f_i are applications."""
        heads = {emit(node.head) for node in walk(loss_expr) if isinstance(node, Apply)}

        assert heads == {'\\zeta', 'f_{i}'}

    def test_split_rows(self, loss_expr):
        """Test the split environment and trailing comma."""
        assert isinstance(loss_expr, Rows)
        split = next(node for node in walk(loss_expr) if isinstance(node, Rows) and node.env == 'split')
        assert split.rows[-1].trailing == ','

    def test_round_trip(self, loss_expr):
        """Test that the loss parses back to itself."""
        assert parse_math(emit(loss_expr)).expr == loss_expr


class TestEmit:
    """Test LaTeX emission."""

    def test_symbol(self):
        """Test a bare symbol."""
        assert emit(Symbol('x')) == 'x'

    def test_fraction(self):
        """Test a fraction."""
        assert emit(Fraction(Number('1'), Symbol('n'))) == '\\frac{1}{n}'

    def test_integral(self):
        """Test a definite integral with its differential."""
        e = BigOp(BigOpKind.INTEGRAL, None, Number('0'), Number('1'), Symbol('E'), Greek('tau'))

        assert emit(e) == '\\int_{0}^{1} E \\, d\\tau'

    def test_scripts_always_braced(self, parse):
        """Test that scripts are emitted in braces."""
        assert emit(parse('x^2 + y_1')) == 'x^{2} + y_{1}'

    def test_precedence_groups(self):
        """Test that canonical grouping adds brackets only where needed."""
        e = BinOp(BinaryOperator.IMPLICIT_MUL, BinOp(BinaryOperator.ADD, Symbol('a'), Symbol('b')), Symbol('c'))

        assert emit(e) == '\\left( a + b \\right) c'

    def test_sum_is_grouped_before_a_factor(self):
        """Test that a sum followed by a factor is bracketed."""
        total = BigOp(BigOpKind.SUM, Greek('kappa'), Number('1'), Number('1'), Symbol('x'))

        assert emit(BinOp(BinaryOperator.IMPLICIT_MUL, total, Symbol('y'))) == (
            '\\left( \\sum_{\\kappa=1}^{1} x \\right) y'
        )

    def test_negative_factor(self):
        """Test that a negated factor is bracketed in a product."""
        e = BinOp(BinaryOperator.MUL, Symbol('a'), Neg(Symbol('b')))

        assert emit(e) == 'a \\cdot \\left( -b \\right)'

    def test_canonical_is_idempotent(self, expr_factory):
        """Test that canonicalising twice changes nothing."""
        for seed in range(200):
            once = canonical(expr_factory(seed))
            assert canonical(once) == once

    def test_deterministic(self, loss_expr):
        """Test that equal trees emit equal text."""
        assert emit(loss_expr) == emit(loss_expr)


@pytest.mark.slow
class TestRoundTrip:
    """Test parse(emit(e)) == canonical(e) on generated trees."""

    def test_generated_expressions(self, expr_factory):
        """Test ten thousand generated expressions."""
        for seed in range(10_000):
            e = expr_factory(seed)
            outcome = parse_math(emit(e))
            assert outcome.ok, (seed, emit(e), outcome.result)
            assert outcome.expr == canonical(e), (seed, emit(e))

"""
LaTeX math expressions: tokenizer, parser, AST, canonical grouping and emitter.
"""

from zero2hero.expr.emitter import emit
from zero2hero.expr.nodes import (
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
    walk,
)
from zero2hero.expr.parser import ParseOutcome, Unparseable, parse, parse_math
from zero2hero.expr.precedence import canonical
from zero2hero.expr.symbols import free_symbols, names_in, rename_free, symbol_key
from zero2hero.expr.tokenizer import Token, TokenKind, tokenize

__all__ = [
    'Apply',
    'BigOp',
    'BigOpKind',
    'BinOp',
    'BinaryOperator',
    'BracketKind',
    'Constant',
    'ConstantKind',
    'Expr',
    'Fraction',
    'Function',
    'Greek',
    'Group',
    'Neg',
    'Number',
    'Opaque',
    'ParseOutcome',
    'Partial',
    'Pos',
    'RelOp',
    'Relation',
    'Row',
    'Rows',
    'Symbol',
    'Token',
    'TokenKind',
    'Unparseable',
    'canonical',
    'emit',
    'free_symbols',
    'names_in',
    'parse',
    'parse_math',
    'rename_free',
    'symbol_key',
    'tokenize',
    'walk',
]

"""
Operator precedence and canonical grouping.

The emitter writes no precedence brackets of its own. `canonical` inserts an
explicit `\\left( ... \\right)` Group wherever re-parsing the emitted text would
otherwise bind differently, so the tree that is emitted is exactly the tree
that parses back.
"""

from zero2hero.expr.nodes import (
    Apply,
    BigOp,
    BinaryOperator,
    BinOp,
    Constant,
    ConstantKind,
    Expr,
    Function,
    Greek,
    Group,
    Neg,
    Number,
    Partial,
    Pos,
    Relation,
    Rows,
    Symbol,
    map_children,
)

RELATION_LEVEL = 0
ADD_LEVEL = 1
SIGN_LEVEL = 2
MUL_LEVEL = 3
POW_LEVEL = 4
ATOM_LEVEL = 5

ADDITIVE = frozenset({BinaryOperator.ADD, BinaryOperator.SUB})
MULTIPLICATIVE = frozenset({BinaryOperator.MUL, BinaryOperator.IMPLICIT_MUL, BinaryOperator.DIV})

# Functions written `\name^{k} x` when raised to a power
POWER_NOTATION_EXCLUDED = frozenset({'exp', 'sqrt', 'root'})


def precedence(e: Expr) -> int:
    match e:
        case Relation() | Rows():
            return RELATION_LEVEL
        case BinOp(op=op) if op in ADDITIVE:
            return ADD_LEVEL
        case Neg() | Pos():
            return SIGN_LEVEL
        case BinOp(op=op) if op in MULTIPLICATIVE:
            return MUL_LEVEL
        case BigOp() | Partial():
            return MUL_LEVEL
        case BinOp(op=BinaryOperator.POW):
            return POW_LEVEL
        case _:
            return ATOM_LEVEL


def ends_open(e: Expr) -> bool:
    """True when the text of `e` ends in a prefix operator whose body would swallow a following factor."""
    match e:
        case BigOp(kind=kind):
            return not kind.is_integral
        case Partial():
            return True
        case BinOp(op=op, right=right) if op is not BinaryOperator.POW:
            return ends_open(right)
        case Neg(operand=operand) | Pos(operand=operand):
            return ends_open(operand)
        case _:
            return False


def uses_power_notation(e: Expr) -> bool:
    return isinstance(e, Function) and len(e.args) == 1 and e.name not in POWER_NOTATION_EXCLUDED


def bare_argument(e: Expr) -> bool:
    """Function arguments that are written without brackets."""
    return isinstance(e, Symbol | Greek | Number | Constant)


def _pow_base_ok(e: Expr) -> bool:
    return isinstance(e, Number | Symbol | Greek | Constant | Group | Apply) or uses_power_notation(e)


def group(e: Expr) -> Group:
    return Group(e)


def _grouped_if(e: Expr, needed: bool) -> Expr:
    return group(e) if needed else e


def _canonical_node(e: Expr) -> Expr:
    match e:
        case BinOp(op=BinaryOperator.POW, left=Constant(kind=ConstantKind.E), right=exponent):
            return Function('exp', (exponent,))
        case BinOp(op=BinaryOperator.POW, left=base, right=exponent):
            return BinOp(BinaryOperator.POW, _grouped_if(base, not _pow_base_ok(base)), exponent)
        case BinOp(op=op, left=left, right=right) if op in ADDITIVE:
            return BinOp(
                op,
                _grouped_if(left, precedence(left) < ADD_LEVEL),
                _grouped_if(right, precedence(right) <= ADD_LEVEL),
            )
        case BinOp(op=op, left=left, right=right):
            right_chain = isinstance(right, BinOp) and right.op in MULTIPLICATIVE
            return BinOp(
                op,
                _grouped_if(left, precedence(left) < MUL_LEVEL or ends_open(left)),
                _grouped_if(right, precedence(right) < MUL_LEVEL or right_chain),
            )
        case Neg(operand=operand):
            return Neg(_grouped_if(operand, precedence(operand) < SIGN_LEVEL))
        case Pos(operand=operand):
            return Pos(_grouped_if(operand, precedence(operand) < SIGN_LEVEL))
        case BigOp(lower=lower, body=body):
            return BigOp(
                e.kind,
                e.bound_var,
                _grouped_if(lower, lower is not None and precedence(lower) == RELATION_LEVEL),
                e.upper,
                _grouped_if(body, precedence(body) < MUL_LEVEL),
                e.differential,
            )
        case Partial(operand=operand):
            return Partial(e.order, e.wrt, _grouped_if(operand, precedence(operand) < MUL_LEVEL))
        case Relation(parts=parts):
            return Relation(
                tuple(None if p is None else _grouped_if(p, precedence(p) == RELATION_LEVEL) for p in parts),
                e.ops,
                e.aligned,
            )
        case _:
            return e


def canonical(e: Expr) -> Expr:
    """Insert the groups precedence forces and normalise `e^{x}` to exp. Idempotent."""
    return _canonical_node(map_children(e, canonical))

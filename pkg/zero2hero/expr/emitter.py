"""
LaTeX emission for the expression AST.
"""

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
    Row,
    Rows,
    Symbol,
)
from zero2hero.expr.precedence import bare_argument, canonical, uses_power_notation

CONSTANT_TEXT = {
    ConstantKind.PI: '\\pi',
    ConstantKind.E: 'e',
    ConstantKind.HBAR: '\\hbar',
    ConstantKind.H: 'h',
}

BIGOP_TEXT = {
    BigOpKind.SUM: '\\sum',
    BigOpKind.PROD: '\\prod',
    BigOpKind.INTEGRAL: '\\int',
    BigOpKind.CONTOUR_INTEGRAL: '\\oint',
}

BRACKET_TEXT = {
    BracketKind.PAREN: ('(', ')'),
    BracketKind.BRACKET: ('[', ']'),
    BracketKind.BRACE: ('\\{', '\\}'),
    BracketKind.VERT: ('|', '|'),
}

BINARY_TEXT = {
    BinaryOperator.ADD: ' + ',
    BinaryOperator.SUB: ' - ',
    BinaryOperator.MUL: ' \\cdot ',
    BinaryOperator.IMPLICIT_MUL: ' ',
    BinaryOperator.DIV: ' / ',
}

ROW_SEPARATOR = ' \\\\\n'


def emit(e: Expr) -> str:
    """Emit `e` as LaTeX math. The canonical form of `e` is what gets written."""
    return _emit(canonical(e))


def emit_row(row: Row) -> str:
    parts = ['& ' if row.lead_align else '']
    if row.body is not None:
        parts.append(_emit(row.body))
    parts.append(row.trailing)
    text = ''.join(parts).rstrip() if row.body is None else ''.join(parts)
    for annotation in row.annotations:
        text = f'{text} {annotation}' if text else annotation
    return text


def _scripted(core: str, sub: Expr | None, accent: str | None) -> str:
    if accent is not None:
        inner = core if sub is None else f'{core}_{{{_emit(sub)}}}'
        return f'\\{accent}{{{inner}}}'
    return core if sub is None else f'{core}_{{{_emit(sub)}}}'


def _argument(arg: Expr) -> str:
    if bare_argument(arg):
        text = _emit(arg)
        return text if text.startswith('\\') else f' {text}'
    return f'\\left( {_emit(arg)} \\right)'


def _function(fn: Function, power: Expr | None = None) -> str:
    match fn.name, fn.args:
        case 'exp', (arg,):
            return f'e^{{{_emit(arg)}}}'
        case 'sqrt', (arg,):
            return f'\\sqrt{{{_emit(arg)}}}'
        case 'root', (arg, degree):
            return f'\\sqrt[{_emit(degree)}]{{{_emit(arg)}}}'
        case 'log', (arg, base):
            return f'\\log_{{{_emit(base)}}}{_argument(arg)}'
        case name, (arg,):
            head = f'\\{name}' if power is None else f'\\{name}^{{{_emit(power)}}}'
            return head + _argument(arg)
        case name, args:
            return f'\\{name}\\left( {", ".join(_emit(a) for a in args)} \\right)'


def _bounds(e: BigOp) -> str:
    text = ''
    if e.bound_var is not None and e.lower is not None:
        text += f'_{{{_emit(e.bound_var)}={_emit(e.lower)}}}'
    elif e.bound_var is not None:
        text += f'_{{{_emit(e.bound_var)}}}'
    elif e.lower is not None:
        text += f'_{{{_emit(e.lower)}}}'
    if e.upper is not None:
        text += f'^{{{_emit(e.upper)}}}'
    return text


def _partial(e: Partial) -> str:
    wrt = _emit(e.wrt)
    if e.order == 1:
        operator = f'\\frac{{\\partial}}{{\\partial {wrt}}}'
    else:
        operator = f'\\frac{{\\partial^{{{e.order}}}}}{{\\partial {wrt}^{{{e.order}}}}}'
    return f'{operator} {_emit(e.operand)}'


def _group(e: Group) -> str:
    inner = _emit(e.inner)
    if e.bracket is BracketKind.INVISIBLE:
        return f'{{{inner}}}'
    opener, closer = BRACKET_TEXT[e.bracket]
    if e.size is None:
        return f'{opener}{inner}{closer}'
    if e.size == 'left':
        return f'\\left{opener} {inner} \\right{closer}'
    return f'\\{e.size}{opener} {inner} \\{e.size}{closer}'


def _relation(e: Relation) -> str:
    text = '' if e.parts[0] is None else _emit(e.parts[0])
    for op, aligned, part in zip(e.ops, e.aligned, e.parts[1:]):
        piece = ('&' if aligned else '') + op.value
        if part is not None:
            piece += f' {_emit(part)}'
        text = f'{text} {piece}' if text else piece
    return text


def _emit(e: Expr) -> str:
    match e:
        case Number(text=text):
            return text
        case Symbol(name=name, sub=sub, accent=accent, font=font):
            core = name if font is None else f'\\{font}{{{name}}}'
            return _scripted(core, sub, accent)
        case Greek(name=name, sub=sub, accent=accent):
            return _scripted(f'\\{name}', sub, accent)
        case Constant(kind=kind):
            return CONSTANT_TEXT[kind]
        case Neg(operand=operand):
            return f'-{_emit(operand)}'
        case Pos(operand=operand):
            return f'+{_emit(operand)}'
        case BinOp(op=BinaryOperator.POW, left=base, right=exponent):
            if uses_power_notation(base):
                return _function(base, power=exponent)
            return f'{_emit(base)}^{{{_emit(exponent)}}}'
        case BinOp(op=op, left=left, right=right):
            return f'{_emit(left)}{BINARY_TEXT[op]}{_emit(right)}'
        case Fraction(numerator=numerator, denominator=denominator):
            return f'\\frac{{{_emit(numerator)}}}{{{_emit(denominator)}}}'
        case Function():
            return _function(e)
        case Apply(head=head, args=args):
            return f'{_emit(head)}\\left( {", ".join(_emit(a) for a in args)} \\right)'
        case BigOp():
            text = f'{BIGOP_TEXT[e.kind]}{_bounds(e)} {_emit(e.body)}'
            if e.differential is not None:
                text += f' \\, d{_emit(e.differential)}'
            return text
        case Partial():
            return _partial(e)
        case Group():
            return _group(e)
        case Opaque(raw=raw):
            return raw
        case Relation():
            return _relation(e)
        case Rows(rows=rows, env=env):
            body = ROW_SEPARATOR.join(emit_row(row) for row in rows)
            if env is None:
                return body
            return f'\\begin{{{env}}}\n{body}\n\\end{{{env}}}'
        case _:
            raise TypeError(f'Cannot emit {type(e).__name__}')

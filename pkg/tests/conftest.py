"""
Test configuration and fixtures.
"""

import numpy as np
import pytest
from click.testing import CliRunner

from zero2hero.cli import create_cli
from zero2hero.expr import (
    Apply,
    BigOp,
    BigOpKind,
    BinaryOperator,
    BinOp,
    Constant,
    ConstantKind,
    Expr,
    Fraction,
    Function,
    Greek,
    Neg,
    Number,
    Opaque,
    Partial,
    Relation,
    RelOp,
    Row,
    Rows,
    Symbol,
    parse_math,
)
from zero2hero.settings import Settings

LOSS_EQUATION = r"""\begin{equation}
\begin{split}
    \mathcal{L}=\sum_{i=1}^{n}\Bigg[&-y_i\oint_{\Omega}\Bigg(\zeta\left(\frac{\hat{y_i}}{1 - \hat{y_i}} \right) \frac{\partial}{\partial \theta_i} \left( f_i(\theta) \log \frac{\hat{y_i}}{1 - \hat{y_i}}\right) \Bigg) d\theta \\
&+ \frac{1}{2} \sum_{k=1}^{n} \frac{\partial^2}{\partial x_k^2} \left( \sum_{i=1}^{n} y_i \hat{y_i} \frac{\partial \log f_i(\theta)}{\partial x_k} \right)\Bigg],
\end{split}
\end{equation}"""

SAMPLE_DOCUMENT = r"""\documentclass{article}
\begin{document}
Energy is $E = mc^{2}$ and % a comment with $dollars$
the sum \( \sum_{k=1}^{3} k \) is six.
\[ \frac{a}{b} + x \]
Prices in \verb|$5| stay prose, as does \$10.
\begin{align}
a &= b + c \\
  &= d
\end{align}
\end{document}
"""

# Symbol names that parse back as plain symbols
LETTERS = tuple('abcmnpqrstuvwxyz')
GREEK = ('alpha', 'beta', 'kappa', 'tau', 'omega', 'Omega', 'theta', 'varphi')
FUNCTIONS = ('sin', 'cos', 'tan', 'ln', 'exp', 'sqrt')
CONSTANTS = (ConstantKind.PI, ConstantKind.HBAR, ConstantKind.H)
BINARY = (
    BinaryOperator.ADD,
    BinaryOperator.SUB,
    BinaryOperator.MUL,
    BinaryOperator.IMPLICIT_MUL,
    BinaryOperator.DIV,
    BinaryOperator.POW,
)


def _pick(rng: np.random.Generator, items):
    return items[int(rng.integers(len(items)))]


def _leaf(rng: np.random.Generator) -> Expr:
    match int(rng.integers(4)):
        case 0:
            return Number(str(int(rng.integers(1, 10))))
        case 1:
            return Symbol(_pick(rng, LETTERS))
        case 2:
            return Greek(_pick(rng, GREEK))
        case _:
            return Constant(_pick(rng, CONSTANTS))


def random_expr(rng: np.random.Generator, depth: int = 4) -> Expr:
    """Random expression over the constructs the emitter and parser invert exactly."""
    if depth <= 0 or rng.random() < 0.25:
        return _leaf(rng)
    match int(rng.integers(6)):
        case 0 | 1:
            return BinOp(_pick(rng, BINARY), random_expr(rng, depth - 1), random_expr(rng, depth - 1))
        case 2:
            return Fraction(random_expr(rng, depth - 1), random_expr(rng, depth - 1))
        case 3:
            return Function(_pick(rng, FUNCTIONS), (random_expr(rng, depth - 1),))
        case 4:
            return Neg(random_expr(rng, depth - 1))
        case _:
            kind = _pick(rng, (BigOpKind.SUM, BigOpKind.PROD))
            upper = Number(str(int(rng.integers(1, 4))))
            return BigOp(kind, Greek(_pick(rng, GREEK)), Number('1'), upper, random_expr(rng, depth - 1))


ACCENT_NAMES = ('hat', 'bar', 'tilde', 'vec')
FONT_NAMES = ('mathcal', 'mathbb', 'mathbf')
OPAQUE_TEXT = ('\\mycmd{a}', '\\text{if}', '\\operatorname{tr}', '\\hat{x + y}', '\\mathbb{1}')
RELATIONS = (RelOp.EQ, RelOp.LE, RelOp.APPROX)


def _atom(rng: np.random.Generator) -> Expr:
    match int(rng.integers(6)):
        case 0:
            return Symbol(_pick(rng, LETTERS), sub=Symbol(_pick(rng, LETTERS)))
        case 1:
            return Symbol(_pick(rng, LETTERS), accent=_pick(rng, ACCENT_NAMES))
        case 2:
            return Symbol(_pick(rng, ('L', 'R', 'N')), font=_pick(rng, FONT_NAMES))
        case 3:
            return Greek(_pick(rng, GREEK), sub=Number(str(int(rng.integers(1, 10)))))
        case 4:
            return Opaque(_pick(rng, OPAQUE_TEXT))
        case _:
            return _leaf(rng)


def _wide_expr(rng: np.random.Generator, depth: int) -> Expr:
    if depth <= 0 or rng.random() < 0.3:
        return _atom(rng)
    match int(rng.integers(7)):
        case 0 | 1:
            return BinOp(_pick(rng, BINARY), _wide_expr(rng, depth - 1), _wide_expr(rng, depth - 1))
        case 2:
            return Fraction(_wide_expr(rng, depth - 1), _wide_expr(rng, depth - 1))
        case 3:
            upper = Number(str(int(rng.integers(1, 4))))
            return BigOp(BigOpKind.INTEGRAL, None, Number('0'), upper, _wide_expr(rng, depth - 1), Greek('xi'))
        case 4:
            return Partial(int(rng.integers(1, 3)), Symbol(_pick(rng, LETTERS)), _wide_expr(rng, depth - 1))
        case 5:
            return Apply(Symbol(_pick(rng, ('f', 'g'))), (_wide_expr(rng, depth - 1),))
        case _:
            return random_expr(rng, depth - 1)


def _relation(rng: np.random.Generator, depth: int) -> Expr:
    count = int(rng.integers(1, 3))
    parts = [None if rng.random() < 0.15 else _wide_expr(rng, depth) for _ in range(count + 1)]
    ops = tuple(_pick(rng, RELATIONS) for _ in range(count))
    return Relation(tuple(parts), ops, (False,) * count)


def random_equation(rng: np.random.Generator, depth: int = 3) -> Expr:
    """
    Random equation over the wider syntax: scripts, accents, fonts, integrals,
    derivatives, unparsed commands, applications, relations and rows.

    Unlike `random_expr`, a generated tree need not be what its LaTeX parses to.
    """
    match int(rng.integers(3)):
        case 0:
            return _wide_expr(rng, depth)
        case 1:
            return _relation(rng, depth)
        case _:
            rows = []
            for i in range(int(rng.integers(1, 4))):
                annotations = (f'\\label{{eq:{i}}}',) if rng.random() < 0.3 else ()
                lead_align = bool(rng.random() < 0.5)
                rows.append(Row(_relation(rng, depth - 1), lead_align=lead_align, annotations=annotations))
            return Rows(tuple(rows), env=_pick(rng, (None, 'aligned')))


# Tokens of argument-taking commands in awkward places
MATH_SOUP = (
    'x', 'y', 'd', '2', '+', '=', '(', ')', '{', '}', '^', '_', '&', ' ', '\\,',
    '\\tau', '\\alpha', '\\hat', '\\mathcal', '\\tag', '\\label', '\\log', '\\int', '\\frac', '\\leq', '\\sum',
)  # fmt: skip


def random_math_text(rng: np.random.Generator, length: int = 8) -> str:
    return ''.join(_pick(rng, MATH_SOUP) for _ in range(int(rng.integers(1, length + 1))))


@pytest.fixture
def cli():
    """Create the command group."""
    return create_cli()


@pytest.fixture
def runner():
    """Create a test CLI runner."""
    return CliRunner()


@pytest.fixture
def loss_equation():
    """The multi-row loss equation, with its equation environment."""
    return LOSS_EQUATION


@pytest.fixture
def loss_expr():
    """The parsed body of the loss equation."""
    inner = LOSS_EQUATION.removeprefix('\\begin{equation}').removesuffix('\\end{equation}')
    return parse_math(inner).expr


@pytest.fixture
def sample_document():
    return SAMPLE_DOCUMENT


@pytest.fixture
def write_document(tmp_path):
    """Write text to a file under tmp_path and return its path."""

    def write(text: str, name: str = 'input.tex'):
        path = tmp_path / name
        path.write_text(text, encoding='utf-8')
        return path

    return write


@pytest.fixture
def expr_factory():
    """Seeded random expressions: expr_factory(seed, depth=4)."""

    def make(seed: int, depth: int = 4) -> Expr:
        return random_expr(np.random.default_rng(seed), depth)

    return make


@pytest.fixture
def equation_factory():
    """Seeded random equations over the wider syntax: equation_factory(seed, depth=3)."""

    def make(seed: int, depth: int = 3) -> Expr:
        return random_equation(np.random.default_rng(seed), depth)

    return make


@pytest.fixture
def math_text_factory():
    """Seeded random math text from a small token soup."""

    def make(seed: int) -> str:
        return random_math_text(np.random.default_rng(seed))

    return make


@pytest.fixture
def parse():
    """Parse math text, failing the test if it does not parse."""

    def parse_or_fail(text: str) -> Expr:
        outcome = parse_math(text)
        assert outcome.ok, f'{text!r}: {outcome.result}'
        return outcome.expr

    return parse_or_fail


@pytest.fixture
def environment(monkeypatch):
    """Load settings from ZERO2HERO_* variables for one test: environment(ZERO2HERO_SEED='-5')."""

    def load(**variables: str) -> Settings:
        for name, value in variables.items():
            monkeypatch.setenv(name, value)
        loaded = Settings.load_from_env()
        for module in ('zero2hero.pipeline', 'zero2hero.schemas.run', 'zero2hero.utils.decorators'):
            monkeypatch.setattr(f'{module}.settings', loaded)
        return loaded

    return load

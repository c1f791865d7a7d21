"""
Fresh Greek symbols for bound variables and renamings.
"""

from collections.abc import Iterable, Iterator

from zero2hero.expr.nodes import Greek, Number
from zero2hero.expr.symbols import names_in, symbol_key

PREFERENCE_ORDER = (
    'kappa', 'tau', 'varphi', 'xi', 'psi', 'omega', 'eta', 'mu', 'nu', 'rho', 'sigma', 'chi', 'lambda',
    'beta', 'gamma', 'delta', 'epsilon', 'iota', 'upsilon', 'vartheta', 'varrho', 'varsigma', 'varepsilon',
    'alpha', 'zeta', 'theta', 'phi',
)  # fmt: skip


class FreshSymbolSource:
    """
    Hands out Greek symbols that occur nowhere in the expression being rewritten.

    Every symbol produced is added to the forbidden set, so successive
    productions are distinct.
    """

    def __init__(self, forbidden: Iterable[str] = ()):
        self.forbidden = set(forbidden)

    @classmethod
    def for_expr(cls, e) -> 'FreshSymbolSource':
        return cls(names_in(e))

    def forbid(self, names: Iterable[str]):
        self.forbidden.update(names)

    def _is_free(self, candidate: Greek) -> bool:
        if candidate.sub is None and f'\\{candidate.name}' in self.forbidden:
            return False
        return symbol_key(candidate) not in self.forbidden

    def _candidates(self, preferred: Iterable[str]) -> Iterator[Greek]:
        for name in preferred:
            yield Greek(name)
        for name in PREFERENCE_ORDER:
            yield Greek(name)
        index = 1
        while True:
            for name in PREFERENCE_ORDER:
                yield Greek(name, sub=Number(str(index)))
            index += 1

    def take(self, preferred: Iterable[str] = ()) -> Greek:
        for candidate in self._candidates(preferred):
            if self._is_free(candidate):
                key = symbol_key(candidate)
                self.forbidden.add(key)
                if candidate.sub is None:
                    self.forbidden.add(f'\\{candidate.name}')
                return candidate
        raise AssertionError('unreachable: the candidate stream is infinite')

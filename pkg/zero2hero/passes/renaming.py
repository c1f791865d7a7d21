"""
Greek renaming of free symbols.
"""

from numpy.random import Generator

from zero2hero.expr.nodes import Expr, Greek, Opaque, Symbol, walk
from zero2hero.expr.precedence import canonical
from zero2hero.expr.symbols import free_symbols, opaque_identifiers, rename_free, symbol_key
from zero2hero.passes.base import RewriteResult, SemanticsClass, TransformPass
from zero2hero.passes.fresh import FreshSymbolSource


def renamable_symbols(e: Expr) -> dict[str, Symbol]:
    """
    Free non-Greek symbols of `e` keyed by symbol key, with one occurrence each.

    Symbols whose letter or key also shows up inside unparsed text are left
    out, since the unparsed copy could not be renamed along with them.
    """
    free = free_symbols(e)
    in_opaque: set[str] = set()
    for node in walk(e):
        if isinstance(node, Opaque):
            in_opaque |= opaque_identifiers(node.raw)

    found: dict[str, Symbol] = {}
    for node in walk(e):
        if not isinstance(node, Symbol):
            continue
        key = symbol_key(node)
        if key in free and key not in in_opaque and node.name not in in_opaque:
            found.setdefault(key, node)
    return dict(sorted(found.items()))


class GreekRenamePass(TransformPass):
    """Rename one free Latin symbol, all its free occurrences, to a fresh Greek letter."""

    id = 'greek-rename'
    description = 'Rename a free symbol to a Greek letter'
    semantics_class = SemanticsClass.RENAMING
    preferred = ('psi',)

    def applicable(self, e: Expr) -> bool:
        return bool(renamable_symbols(e))

    def apply(self, e: Expr, rng: Generator, fresh: FreshSymbolSource) -> RewriteResult:
        candidates = renamable_symbols(e)
        if not candidates:
            return RewriteResult(e, {})
        old = list(candidates)[int(rng.integers(len(candidates)))]
        target = fresh.take(self.preferred)

        def make(occurrence: Symbol) -> Greek:
            sub = occurrence.sub if target.sub is None else target.sub
            return Greek(target.name, sub=sub, accent=occurrence.accent)

        renamed = canonical(rename_free(e, old, make))
        return RewriteResult(renamed, {old: symbol_key(make(candidates[old]))})

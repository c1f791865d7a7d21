"""
Symbol scope analysis: free symbols, every name in use, and capture-avoiding renaming.

A symbol is identified by its emitted text, so `x`, `x_{k}` and `\\hat{x}` are
three different symbols and a Greek symbol's key carries its backslash.
"""

import re
from collections.abc import Callable

from zero2hero.expr.emitter import emit
from zero2hero.expr.nodes import Apply, BigOp, Expr, Greek, Opaque, Symbol, iter_children, map_children, walk

_OPAQUE_IDENTIFIER = re.compile(r'\\[A-Za-z]+|[A-Za-z]')


def symbol_key(e: Expr) -> str:
    return emit(e)


def opaque_identifiers(raw: str) -> set[str]:
    """Command names and single letters in unparsed text."""
    return set(_OPAQUE_IDENTIFIER.findall(raw))


def _binder(e: BigOp) -> Expr | None:
    return e.differential if e.kind.is_integral else e.bound_var


def _collect_free(e: Expr, bound: frozenset[str], out: set[str]):
    match e:
        case Symbol() | Greek():
            key = symbol_key(e)
            if key not in bound:
                out.add(key)
        case Opaque(raw=raw):
            out.update(opaque_identifiers(raw))
        case Apply(args=args):
            for arg in args:
                _collect_free(arg, bound, out)
        case BigOp(lower=lower, upper=upper, body=body):
            for limit in (lower, upper):
                if limit is not None:
                    _collect_free(limit, bound, out)
            binder = _binder(e)
            _collect_free(body, bound if binder is None else bound | {symbol_key(binder)}, out)
        case _:
            for child in iter_children(e):
                _collect_free(child, bound, out)


def free_symbols(e: Expr) -> set[str]:
    """
    Keys of the symbols occurring free in `e`.

    Bound variables of sums, products and integrals are excluded inside
    their body, heads of uninterpreted applications are not symbols, and
    unparsed text contributes every identifier it contains.
    """
    out: set[str] = set()
    _collect_free(e, frozenset(), out)
    return out


def names_in(e: Expr) -> set[str]:
    """Every name used anywhere in `e`, free or bound, including inside subscripts."""
    names: set[str] = set()
    for node in walk(e):
        match node:
            case Symbol(name=name):
                names.update((name, symbol_key(node)))
            case Greek(name=name):
                names.update((f'\\{name}', symbol_key(node)))
            case Opaque(raw=raw):
                names.update(opaque_identifiers(raw))
    return names


def rename_free(e: Expr, old: str, make: Callable[[Expr], Expr]) -> Expr:
    """
    Replace every free occurrence of the symbol keyed `old` with `make(occurrence)`.

    Occurrences shadowed by a binder of the same key are left alone.
    """
    match e:
        case Symbol() | Greek():
            return make(e) if symbol_key(e) == old else e
        case Apply(head=head, args=args):
            return Apply(head, tuple(rename_free(a, old, make) for a in args))
        case BigOp():
            binder = _binder(e)
            shadowed = binder is not None and symbol_key(binder) == old

            def limit(value: Expr | None) -> Expr | None:
                return None if value is None else rename_free(value, old, make)

            return BigOp(
                e.kind,
                e.bound_var,
                limit(e.lower),
                limit(e.upper),
                e.body if shadowed else rename_free(e.body, old, make),
                e.differential,
            )
        case _:
            return map_children(e, lambda child: rename_free(child, old, make))

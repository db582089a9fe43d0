"""Deciding equivalence of multicontexts by generic instantiation."""

from collections import Counter
from typing import Dict, Iterable, Set

from kdcfg.core.terms import (
    Multicontext,
    NonterminalLeaf,
    Variable,
    WordLeaf,
    evaluate,
    leaves,
)
from kdcfg.core.words import SEP, SepWord
from kdcfg.utils.errors import VariableMismatch


def _open_leaves(term: Multicontext) -> Counter:
    return Counter(
        (type(leaf).__name__, leaf.name, leaf.rank)
        for leaf in leaves(term)
        if isinstance(leaf, (Variable, NonterminalLeaf))
    )


def _letters(terms: Iterable[Multicontext]) -> Set[str]:
    found: Set[str] = set()
    for term in terms:
        for leaf in leaves(term):
            if isinstance(leaf, WordLeaf):
                found.update(str(s) for s in leaf.word.symbols)
    return found


def generic_valuation(term: Multicontext, avoid: Set[str] = frozenset()) -> Dict[str, SepWord]:
    """Map each open leaf of rank l to g0 1 g1 ... 1 gl with pairwise fresh letters."""
    valuation: Dict[str, SepWord] = {}
    for leaf in leaves(term):
        if not isinstance(leaf, (Variable, NonterminalLeaf)) or leaf.name in valuation:
            continue
        symbols = []
        for m in range(leaf.rank + 1):
            if m:
                symbols.append(SEP)
            fresh = f"<{leaf.name}.{m}>"
            while fresh in avoid:
                fresh = f"<{fresh}>"
            symbols.append(fresh)
        valuation[leaf.name] = SepWord(tuple(symbols))
    return valuation


def equivalent(c1: Multicontext, c2: Multicontext) -> bool:
    """True iff c1 and c2 have the same value under every valuation."""
    if _open_leaves(c1) != _open_leaves(c2):
        raise VariableMismatch(
            f"open leaves differ: {sorted(_open_leaves(c1))} vs {sorted(_open_leaves(c2))}"
        )
    valuation = generic_valuation(c1, avoid=_letters((c1, c2)))
    return evaluate(c1, valuation) == evaluate(c2, valuation)

"""Bounded enumeration of the words each nonterminal derives.

This is the reference oracle for conversion and parsing. It computes the
least fixpoint of the rules semi-naively: each round only combines words
where at least one operand was found in the previous round.
"""

from itertools import product
from typing import Dict, List, Set, Tuple

from kdcfg.core.terms import NonterminalLeaf, Term, evaluate, skeleton
from kdcfg.core.words import SepWord
from kdcfg.grammar.model import Grammar
from kdcfg.utils.errors import KdcfgError, RankMismatch
from kdcfg.utils.logging import logger

Language = Dict[str, Set[SepWord]]


def _skeletons(g: Grammar) -> List[Tuple[str, Term, List[NonterminalLeaf]]]:
    result = []
    for rule in g.rules:
        body, found = skeleton(rule.rhs)
        result.append((rule.lhs, body, found))
    return result


def enumerate_language(g: Grammar, max_len: int) -> Language:
    """Words of length at most max_len (separators counted) derivable from each nonterminal.

    Intermediate words are bounded by their letter count, which neither
    connective can decrease; raw length can shrink when eps fills a gap.
    """
    rules = _skeletons(g)
    known: Language = {name: set() for name in g.nonterminals}
    delta: Language = {name: set() for name in g.nonterminals}

    for lhs, body, found in rules:
        if not found:
            value = evaluate(body)
            if value.letters <= max_len:
                delta[lhs].add(value)

    rounds = 0
    while any(delta.values()):
        rounds += 1
        for name, words in delta.items():
            known[name] |= words
        fresh: Language = {name: set() for name in g.nonterminals}
        for lhs, body, found in rules:
            names = [leaf.name for leaf in found]
            for pivot in range(len(names)):
                if not delta[names[pivot]]:
                    continue
                pools = (
                    [known[n] - delta[n] for n in names[:pivot]]
                    + [delta[names[pivot]]]
                    + [known[n] for n in names[pivot + 1 :]]
                )
                for choice in product(*pools):
                    valuation = {f"x{i + 1}": w for i, w in enumerate(choice)}
                    value = evaluate(body, valuation)
                    if value.letters <= max_len and value not in known[lhs]:
                        fresh[lhs].add(value)
        delta = fresh

    logger.debug(f"enumerate: fixpoint after {rounds} rounds")
    return {
        name: {w for w in words if len(w) <= max_len} for name, words in known.items()
    }


def derives(g: Grammar, nonterminal: str, w: SepWord) -> bool:
    if nonterminal not in g.nonterminals:
        raise KdcfgError(f"unknown nonterminal {nonterminal}")
    if w.rank != g.rank_of(nonterminal):
        raise RankMismatch(
            f"{w} has rank {w.rank} but {nonterminal} has rank {g.rank_of(nonterminal)}"
        )
    return w in enumerate_language(g, len(w))[nonterminal]

"""Order-i grammars generating the (i + 1)-fold copies of nonempty words over {a, b}.

T has rank i and derives v 1 v 1 ... 1 v, each step prepending one letter to
every segment; S prepends the last letter once more and closes the gaps.
"""

from kdcfg.core.terms import (
    Concat,
    Intercalate,
    NonterminalLeaf,
    SepLeaf,
    Term,
    concat,
    word,
)
from kdcfg.grammar.model import Grammar, Rule


def _start_body(letter: str, i: int) -> Term:
    body: Term = Concat(word(letter), NonterminalLeaf("T", i))
    for _ in range(i):
        body = Intercalate(1, body, word(letter))
    return body


def _step_body(letter: str, i: int) -> Term:
    body: Term = Concat(word(letter), NonterminalLeaf("T", i))
    for m in range(1, i + 1):
        body = Intercalate(m, body, Concat(SepLeaf(), word(letter)))
    return body


def _separators(i: int) -> Term:
    return concat(*[SepLeaf() for _ in range(i)])


def grammar_family(i: int) -> Grammar:
    """The grammar whose language is {w^(i+1) : w nonempty over {a, b}}."""
    if i < 1:
        raise ValueError(f"family index must be at least 1, got {i}")
    rules = []
    for letter in ("a", "b"):
        rules.append(Rule("S", _start_body(letter, i)))
    for letter in ("a", "b"):
        rules.append(Rule("T", _step_body(letter, i)))
    rules.append(Rule("T", _separators(i)))
    return Grammar(
        alphabet=frozenset("ab"),
        nonterminals={"S": 0, "T": i},
        rules=tuple(rules),
        start="S",
        k=i,
        name=f"g{i}",
    )

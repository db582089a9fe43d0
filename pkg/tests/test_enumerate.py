import pytest

from kdcfg.core import SepWord
from kdcfg.grammar import derives, dump_grammar, enumerate_language, grammar_family, parse_grammar
from kdcfg.utils.errors import KdcfgError, RankMismatch

# eps fills the gap of B, so raw length shrinks from "a1b" to "ab"
SHRINKING = """
alphabet a b
k 1
start S
nonterm S 0
nonterm B 1
nonterm E 0
rule S -> B @1 E
rule B -> a 1 b
rule E -> eps
"""


def plain(words):
    return {w.plain() for w in words}


def test_g1_up_to_four(g1):
    assert plain(enumerate_language(g1, 4)["S"]) == {"aa", "bb", "aaaa", "abab", "baba", "bbbb"}


def test_g1_rank_one_words(g1):
    assert plain(enumerate_language(g1, 3)["T"]) == {"1", "a1a", "b1b"}


def test_g2_up_to_three(g2):
    assert plain(enumerate_language(g2, 3)["S"]) == {"aaa", "bbb"}


def test_bound_zero(g1):
    assert enumerate_language(g1, 0)["S"] == set()
    g = parse_grammar("alphabet a\nk 0\nstart S\nnonterm S 0\nrule S -> eps | a\n")
    assert plain(enumerate_language(g, 0)["S"]) == {""}


def test_letter_bound_keeps_shrinking_derivations():
    g = parse_grammar(SHRINKING)
    assert plain(enumerate_language(g, 2)["S"]) == {"ab"}
    assert plain(enumerate_language(g, 2)["B"]) == set()


def test_derives(g1):
    assert derives(g1, "S", SepWord.parse("abab"))
    assert not derives(g1, "S", SepWord.parse("aba"))
    assert derives(g1, "T", SepWord.parse("ab1ab"))
    with pytest.raises(RankMismatch):
        derives(g1, "T", SepWord.parse("ab"))
    with pytest.raises(KdcfgError):
        derives(g1, "U", SepWord.parse("ab"))


@pytest.mark.parametrize("i", [1, 2])
def test_family_words_satisfy_counting_constraints(i):
    """Every letter count of a copy language is a multiple of the copy number."""
    g = parse_grammar(dump_grammar(grammar_family(i)))
    for w in enumerate_language(g, 3 * (i + 1))["S"]:
        text = w.plain()
        assert text.count("a") % (i + 1) == 0
        assert text.count("b") % (i + 1) == 0

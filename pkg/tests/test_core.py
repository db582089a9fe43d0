import pytest
from hypothesis import given
import hypothesis.strategies as st

from kdcfg.core import (
    EMPTY,
    SEP,
    Concat,
    Intercalate,
    NonterminalLeaf,
    SepLeaf,
    SepWord,
    Variable,
    WordLeaf,
    check_k_correct,
    evaluate,
    is_ground,
    is_k_essential,
    join_with_separators,
    render,
    skeleton,
    spell,
    substitute,
    word,
    word_intercalate,
    word_wrap,
)
from kdcfg.utils.errors import (
    ArityMismatch,
    IndexOutOfRank,
    NotGround,
    RankConditionError,
    RankMismatch,
)

from tests.strategies import ground_terms, sep_words


def w(text):
    return SepWord.parse(text)


class TestWords:
    def test_parse_and_render(self):
        assert w("a1b").symbols == ("a", SEP, "b")
        assert render(w("a1b")) == "a1b"
        assert render(EMPTY) == "eps"
        assert w("eps") == EMPTY

    def test_rank_counts_separators(self):
        assert w("a1b11d").rank == 3
        assert w("abc").rank == 0
        assert w("a1b11d").letters == 3

    def test_intercalate_examples(self):
        assert word_intercalate(w("a1b11d"), 2, w("c1c")) == w("a1bc1c1d")
        assert word_intercalate(w("a1b1c"), 2, w("a1b")) == w("a1ba1bc")

    def test_intercalate_with_empty_word_drops_the_separator(self):
        assert word_intercalate(w("a1b"), 1, EMPTY) == w("ab")

    @pytest.mark.parametrize("j", [0, 3])
    def test_intercalate_outside_rank(self, j):
        with pytest.raises(IndexOutOfRank):
            word_intercalate(w("a1b1c"), j, w("d"))

    def test_intercalate_into_rank_zero(self):
        with pytest.raises(IndexOutOfRank):
            word_intercalate(w("ab"), 1, w("c"))

    def test_wrap(self):
        assert word_wrap(w("a1b1c"), [w("x"), w("y1")]) == w("axby1c")
        with pytest.raises(ArityMismatch):
            word_wrap(w("a1b"), [])

    def test_segments(self):
        assert [s.plain() for s in w("a11bc1").segments()] == ["a", "", "bc", ""]

    @given(sep_words())
    def test_segments_rejoin(self, value):
        pieces = value.segments()
        assert len(pieces) == value.rank + 1
        assert join_with_separators(pieces) == value

    @given(sep_words(), sep_words(), st.data())
    def test_intercalation_rank_and_length(self, left, right, data):
        if left.rank == 0:
            return
        j = data.draw(st.integers(1, left.rank))
        result = word_intercalate(left, j, right)
        assert result.rank == left.rank + right.rank - 1
        assert len(result) == len(left) + len(right) - 1


class TestTerms:
    def test_example_derivation_term(self):
        def step(letter, below):
            tail = Concat(SepLeaf(), word(letter))
            return Intercalate(2, Intercalate(1, Concat(word(letter), below), tail), tail)

        t0 = Concat(SepLeaf(), SepLeaf())
        t1 = step("a", t0)
        t2 = step("b", t1)
        s = Intercalate(1, Intercalate(1, Concat(word("a"), t2), word("a")), word("a"))
        assert evaluate(s) == w("abaabaaba")

    def test_ranks(self):
        assert Concat(word("a"), SepLeaf()).rank == 1
        assert Intercalate(1, Concat(SepLeaf(), SepLeaf()), SepLeaf()).rank == 2
        with pytest.raises(IndexOutOfRank):
            Intercalate(2, SepLeaf(), word("a"))

    def test_word_leaf_rejects_separators(self):
        with pytest.raises(RankConditionError):
            WordLeaf(w("a1"))

    def test_evaluate_needs_ground_terms(self):
        with pytest.raises(NotGround):
            evaluate(Concat(word("a"), Variable("x", 0)))

    def test_evaluate_checks_valuation_rank(self):
        with pytest.raises(RankMismatch):
            evaluate(Variable("x", 1), {"x": w("ab")})

    def test_k_correct(self):
        t = Intercalate(1, Concat(SepLeaf(), SepLeaf()), word("a"))
        assert check_k_correct(t, 2)
        assert not check_k_correct(t, 1)
        assert check_k_correct(Intercalate(1, SepLeaf(), word("a")), 0) is False
        assert check_k_correct(Concat(word("a"), word("b")), 0)

    def test_k_essential(self):
        heavy = Intercalate(1, Concat(SepLeaf(), SepLeaf()), word("a"))
        assert is_k_essential(heavy, 1)
        assert not is_k_essential(Variable("x", 2), 1)

    def test_skeleton_and_substitute(self):
        t = Intercalate(1, Concat(word("a"), NonterminalLeaf("T", 1)), NonterminalLeaf("U", 0))
        body, found = skeleton(t)
        assert [leaf.name for leaf in found] == ["T", "U"]
        assert not is_ground(body)
        filled = substitute(body, {"x1": spell(w("b1b")), "x2": word("c")})
        assert is_ground(filled)
        assert evaluate(filled) == w("abcb")

    @given(sep_words())
    def test_spell(self, value):
        assert evaluate(spell(value)) == value

    @given(ground_terms())
    def test_ground_terms_evaluate_to_their_rank(self, t):
        assert evaluate(t).rank == t.rank

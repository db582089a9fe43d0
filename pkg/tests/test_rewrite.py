import pytest
from hypothesis import given
import hypothesis.strategies as st

from kdcfg.core import (
    Concat,
    Intercalate,
    SepLeaf,
    SepWord,
    Variable,
    check_k_correct,
    evaluate,
    join_with_separators,
    positions,
    replace_at,
    variables,
    word,
)
from kdcfg.rewrite import (
    Direction,
    RewriteRule,
    apply_rule,
    equivalent,
    heavy_occurrences,
    normalize_k_correct,
    rewrite,
)
from kdcfg.utils.errors import NotEssential, RuleNotApplicable, VariableMismatch

from tests.strategies import essential_multicontexts, ground_terms

operands = ground_terms(max_depth=3, max_rank=3)


def _at_least(t, rank):
    while t.rank < rank:
        t = Concat(t, SepLeaf())
    return t


def _instance(rule_id, x1, x2, x3, data):
    """Left-hand side of rule_id, padding operands with separators where ranks fall short."""
    draw = data.draw
    if rule_id == 1:
        return Concat(Concat(x1, x2), x3)
    if rule_id == 2:
        x1 = _at_least(x1, 1)
        return Intercalate(draw(st.integers(1, x1.rank)), Concat(x1, x2), x3)
    if rule_id == 3:
        x2 = _at_least(x2, 1)
        j = draw(st.integers(x1.rank + 1, x1.rank + x2.rank))
        return Intercalate(j, Concat(x1, x2), x3)
    if rule_id == 4:
        x1 = _at_least(x1, 2)
        l = draw(st.integers(2, x1.rank))
        return Intercalate(draw(st.integers(1, l - 1)), Intercalate(l, x1, x2), x3)
    if rule_id == 5:
        x1, x2 = _at_least(x1, 1), _at_least(x2, 1)
        l = draw(st.integers(1, x1.rank))
        return Intercalate(draw(st.integers(l, l + x2.rank - 1)), Intercalate(l, x1, x2), x3)
    if rule_id == 6:
        x1 = _at_least(x1, 2)
        l = draw(st.integers(1, x1.rank - 1))
        inner = Intercalate(l, x1, x2)
        return Intercalate(draw(st.integers(l + x2.rank, inner.rank)), inner, x3)
    if rule_id == 7:
        return Intercalate(1, SepLeaf(), x1)
    x1 = _at_least(x1, 1)
    return Intercalate(draw(st.integers(1, x1.rank)), x1, SepLeaf())


@pytest.mark.parametrize("rule_id", range(1, 9))
@given(x1=operands, x2=operands, x3=operands, data=st.data())
def test_rewrite_preserves_value(rule_id, x1, x2, x3, data):
    lhs = _instance(rule_id, x1, x2, x3, data)
    rhs = rewrite(lhs, RewriteRule(rule_id))
    assert rhs.rank == lhs.rank
    assert evaluate(rhs) == evaluate(lhs)
    back = rewrite(rhs, RewriteRule(rule_id, Direction.BACKWARD, index=getattr(lhs, "j", None)))
    assert evaluate(back) == evaluate(lhs)


def test_rule_side_conditions():
    x1 = Concat(SepLeaf(), word("a"))
    with pytest.raises(RuleNotApplicable):
        rewrite(Intercalate(1, Concat(x1, SepLeaf()), word("b")), RewriteRule(3))
    with pytest.raises(RuleNotApplicable):
        rewrite(Concat(word("a"), word("b")), RewriteRule(1))


def test_rule_ids_are_bounded():
    with pytest.raises(ValueError):
        RewriteRule(9)


def test_apply_rule_at_position():
    inner = Concat(Concat(word("a"), word("b")), word("c"))
    t = Concat(word("d"), inner)
    result = apply_rule(t, RewriteRule(1), (1,))
    assert result == Concat(word("d"), Concat(word("a"), Concat(word("b"), word("c"))))
    with pytest.raises(RuleNotApplicable):
        apply_rule(t, RewriteRule(1), (0, 1))


def test_equivalence_by_generic_valuation():
    x, y, z = Variable("x1", 1), Variable("x2", 1), Variable("x3", 0)
    lhs = Intercalate(1, Concat(x, y), z)
    assert equivalent(lhs, Concat(Intercalate(1, x, z), y))
    assert not equivalent(lhs, Concat(x, Intercalate(1, y, z)))
    with pytest.raises(VariableMismatch):
        equivalent(lhs, Concat(x, y))


def test_heavy_occurrences():
    heavy = Concat(SepLeaf(), SepLeaf())
    t = Intercalate(1, heavy, word("a"))
    assert heavy_occurrences(t) == (2, [(0,)])


def test_normalize_example():
    t = Intercalate(1, Intercalate(1, Concat(SepLeaf(), SepLeaf()), word("a")), word("b"))
    result = normalize_k_correct(Intercalate(1, Concat(SepLeaf(), SepLeaf()), word("a")), 1)
    assert check_k_correct(result, 1)
    assert evaluate(result).plain() == "a1"
    assert evaluate(normalize_k_correct(t, 0)).plain() == "ab"


def test_normalize_rejects_inessential_input():
    with pytest.raises(NotEssential):
        normalize_k_correct(Variable("x1", 2), 1)


@pytest.mark.parametrize("k", [0, 1, 2, 3])
@given(data=st.data())
def test_normalize_is_k_correct_and_equivalent(k, data):
    c = data.draw(essential_multicontexts(k))
    result = normalize_k_correct(c, k)
    assert check_k_correct(result, k)
    assert equivalent(c, result)


def words_of_rank(rank):
    parts = st.lists(st.text(alphabet="ab", max_size=3), min_size=rank + 1, max_size=rank + 1)
    return parts.map(lambda texts: join_with_separators([SepWord.of(t) for t in texts]))


def valuations(term):
    return st.fixed_dictionaries({v.name: words_of_rank(v.rank) for v in variables(term)})


def _mirror_first_concat(term):
    for path, node in positions(term):
        if isinstance(node, Concat):
            left, right = node.children
            return replace_at(term, path, Concat(right, left))
    return term


@pytest.mark.parametrize("k", [0, 1, 2])
@given(data=st.data())
def test_equivalence_agrees_with_random_valuations(k, data):
    c = data.draw(essential_multicontexts(k))
    for other in (normalize_k_correct(c, k), _mirror_first_concat(c)):
        verdict = equivalent(c, other)
        for _ in range(20):
            valuation = data.draw(valuations(c))
            if evaluate(c, valuation) != evaluate(other, valuation):
                assert not verdict, (c, other, valuation)

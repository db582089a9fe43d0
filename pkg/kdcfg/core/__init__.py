"""Separator words, the term algebra and evaluation."""

from kdcfg.core.words import (
    EMPTY,
    SEP,
    SEP_WORD,
    SepWord,
    Token,
    join_with_separators,
    rank,
    render,
    word_intercalate,
    word_wrap,
)
from kdcfg.core.terms import (
    Concat,
    Intercalate,
    Multicontext,
    NonterminalLeaf,
    SepLeaf,
    Term,
    Variable,
    WordLeaf,
    check_k_correct,
    concat,
    evaluate,
    is_ground,
    is_k_essential,
    leaves,
    nonterminals,
    positions,
    render_term,
    replace_at,
    skeleton,
    spell,
    substitute,
    subterm_at,
    variables,
    word,
)

__all__ = [
    "EMPTY",
    "SEP",
    "SEP_WORD",
    "SepWord",
    "Token",
    "join_with_separators",
    "rank",
    "render",
    "word_intercalate",
    "word_wrap",
    "Concat",
    "Intercalate",
    "Multicontext",
    "NonterminalLeaf",
    "SepLeaf",
    "Term",
    "Variable",
    "WordLeaf",
    "check_k_correct",
    "concat",
    "evaluate",
    "is_ground",
    "is_k_essential",
    "leaves",
    "nonterminals",
    "positions",
    "render_term",
    "replace_at",
    "skeleton",
    "spell",
    "substitute",
    "subterm_at",
    "variables",
    "word",
]

"""Equivalence rewriting and k-correct normalization."""

from kdcfg.rewrite.rules import Direction, RewriteRule, apply_rule, rewrite
from kdcfg.rewrite.normalize import heavy_occurrences, normalize_k_correct
from kdcfg.rewrite.equivalence import equivalent, generic_valuation

__all__ = [
    "Direction",
    "RewriteRule",
    "apply_rule",
    "rewrite",
    "heavy_occurrences",
    "normalize_k_correct",
    "equivalent",
    "generic_valuation",
]

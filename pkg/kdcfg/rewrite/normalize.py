"""Rewriting a k-essential multicontext into an equivalent k-correct one."""

from typing import List, Optional, Tuple

from kdcfg.core.terms import (
    Concat,
    Intercalate,
    Multicontext,
    Path,
    SepLeaf,
    is_k_essential,
    positions,
    subterm_at,
)
from kdcfg.rewrite.rules import RewriteRule, apply_rule
from kdcfg.utils.errors import NotEssential, RankConditionError
from kdcfg.utils.logging import logger


def heavy_occurrences(term: Multicontext) -> Tuple[int, List[Path]]:
    """Maximal rank K of internal subterms and the paths of those reaching it."""
    best = -1
    found: List[Path] = []
    for path, node in positions(term):
        if node.is_leaf:
            continue
        if node.rank > best:
            best, found = node.rank, [path]
        elif node.rank == best:
            found.append(path)
    return best, found


def _step_rule(heavy: Multicontext, j: int) -> int:
    """Rule id moving the outer intercalation at gap j below the heavy node."""
    if isinstance(heavy, Concat):
        return 2 if j <= heavy.left.rank else 3
    if j < heavy.j:
        return 4
    if j < heavy.j + heavy.right.rank:
        return 5
    return 6


def _identity_intercalation(term: Multicontext) -> Optional[Path]:
    for path, node in positions(term):
        if isinstance(node, Intercalate) and node.j == 1 and isinstance(node.left, SepLeaf):
            return path
    return None


def normalize_k_correct(c: Multicontext, k: int) -> Multicontext:
    """Equivalent k-correct multicontext, built by repeatedly pushing the
    shallowest (then leftmost) heaviest subterm under its parent intercalation.
    """
    if not is_k_essential(c, k):
        raise NotEssential(f"multicontext of rank {c.rank} is not {k}-essential")

    current = c
    steps = 0
    while True:
        top, heavy = heavy_occurrences(current)
        if top <= k:
            break
        path = min(heavy, key=lambda p: (len(p), p))
        parent = subterm_at(current, path[:-1]) if path else None
        if not (isinstance(parent, Intercalate) and path[-1] == 0 and parent.right.rank == 0):
            raise RankConditionError(
                f"heavy subterm at {path} is not the left operand of a rank-0 intercalation"
            )
        rule_id = _step_rule(parent.left, parent.j)
        current = apply_rule(current, RewriteRule(rule_id), path[:-1])
        steps += 1
        logger.debug(f"normalize: rule {rule_id} at {path[:-1]} (K={top})")

    if k == 0:
        while True:
            path = _identity_intercalation(current)
            if path is None:
                break
            current = apply_rule(current, RewriteRule(7), path)
            steps += 1

    logger.debug(f"normalize: {steps} steps to {k}-correct form")
    return current

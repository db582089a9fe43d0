"""The eight equivalences between terms, as directed rewrite rules.

Rules are numbered in the usual order:

    1. (x1 · x2) · x3         ~ x1 · (x2 · x3)
    2. (x1 · x2) @j x3        ~ (x1 @j x3) · x2                  if j <= rk x1
    3. (x1 · x2) @j x3        ~ x1 · (x2 @(j - rk x1) x3)        if rk x1 < j <= rk x1 + rk x2
    4. (x1 @l x2) @j x3       ~ (x1 @j x3) @(l + rk x3 - 1) x2   if j < l
    5. (x1 @l x2) @j x3       ~ x1 @l (x2 @(j - l + 1) x3)       if l <= j < l + rk x2
    6. (x1 @l x2) @j x3       ~ (x1 @(j - rk x2 + 1) x3) @l x2   if j >= l + rk x2
    7. 1 @1 x                 ~ x
    8. x @j 1                 ~ x
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from kdcfg.core.terms import (
    Concat,
    Intercalate,
    Path,
    SepLeaf,
    Term,
    replace_at,
    subterm_at,
)
from kdcfg.utils.errors import RuleNotApplicable


class Direction(Enum):
    FORWARD = "forward"
    BACKWARD = "backward"


@dataclass(frozen=True)
class RewriteRule:
    """One of the eight equivalences applied left-to-right or right-to-left.

    index is only read by rule 8 applied backward, where it picks the gap
    receiving the separator.
    """

    rule_id: int
    direction: Direction = Direction.FORWARD
    index: Optional[int] = None

    def __post_init__(self):
        if self.rule_id not in range(1, 9):
            raise ValueError(f"rule ids run from 1 to 8, got {self.rule_id}")

    def reversed(self) -> "RewriteRule":
        flipped = (
            Direction.BACKWARD if self.direction is Direction.FORWARD else Direction.FORWARD
        )
        return RewriteRule(self.rule_id, flipped, self.index)


def _fail(rule_id: int, reason: str):
    raise RuleNotApplicable(f"rule {rule_id}: {reason}")


def _forward(rule_id: int, term: Term) -> Term:
    if rule_id == 1:
        if isinstance(term, Concat) and isinstance(term.left, Concat):
            return Concat(term.left.left, Concat(term.left.right, term.right))
        _fail(1, "needs (x1 · x2) · x3")

    if rule_id in (2, 3):
        if not (isinstance(term, Intercalate) and isinstance(term.left, Concat)):
            _fail(rule_id, "needs (x1 · x2) @j x3")
        x1, x2, x3, j = term.left.left, term.left.right, term.right, term.j
        if rule_id == 2:
            if j > x1.rank:
                _fail(2, f"j = {j} exceeds rk x1 = {x1.rank}")
            return Concat(Intercalate(j, x1, x3), x2)
        if not x1.rank < j <= x1.rank + x2.rank:
            _fail(3, f"j = {j} is not in ({x1.rank}; {x1.rank + x2.rank}]")
        return Concat(x1, Intercalate(j - x1.rank, x2, x3))

    if rule_id in (4, 5, 6):
        if not (isinstance(term, Intercalate) and isinstance(term.left, Intercalate)):
            _fail(rule_id, "needs (x1 @l x2) @j x3")
        x1, x2, x3 = term.left.left, term.left.right, term.right
        l, j = term.left.j, term.j
        if rule_id == 4:
            if not j < l:
                _fail(4, f"needs j < l, got j = {j}, l = {l}")
            return Intercalate(l + x3.rank - 1, Intercalate(j, x1, x3), x2)
        if rule_id == 5:
            if not l <= j < l + x2.rank:
                _fail(5, f"needs l <= j < l + rk x2, got j = {j}, l = {l}, rk x2 = {x2.rank}")
            return Intercalate(l, x1, Intercalate(j - l + 1, x2, x3))
        if not j >= l + x2.rank:
            _fail(6, f"needs j >= l + rk x2, got j = {j}, l = {l}, rk x2 = {x2.rank}")
        return Intercalate(l, Intercalate(j - x2.rank + 1, x1, x3), x2)

    if rule_id == 7:
        if isinstance(term, Intercalate) and term.j == 1 and isinstance(term.left, SepLeaf):
            return term.right
        _fail(7, "needs 1 @1 x")

    if isinstance(term, Intercalate) and isinstance(term.right, SepLeaf):
        return term.left
    _fail(8, "needs x @j 1")


def _backward(rule: RewriteRule, term: Term) -> Term:
    rule_id = rule.rule_id
    if rule_id == 1:
        if isinstance(term, Concat) and isinstance(term.right, Concat):
            return Concat(Concat(term.left, term.right.left), term.right.right)
        _fail(1, "needs x1 · (x2 · x3)")

    if rule_id == 2:
        if isinstance(term, Concat) and isinstance(term.left, Intercalate):
            x1, x3, x2 = term.left.left, term.left.right, term.right
            return Intercalate(term.left.j, Concat(x1, x2), x3)
        _fail(2, "needs (x1 @j x3) · x2")

    if rule_id == 3:
        if isinstance(term, Concat) and isinstance(term.right, Intercalate):
            x1, x2, x3 = term.left, term.right.left, term.right.right
            return Intercalate(term.right.j + x1.rank, Concat(x1, x2), x3)
        _fail(3, "needs x1 · (x2 @m x3)")

    if rule_id == 4:
        if isinstance(term, Intercalate) and isinstance(term.left, Intercalate):
            x1, x3, x2 = term.left.left, term.left.right, term.right
            j, m = term.left.j, term.j
            l = m - x3.rank + 1
            if not (j < l <= x1.rank):
                _fail(4, f"needs j < m - rk x3 + 1 <= rk x1, got j = {j}, m = {m}")
            return Intercalate(j, Intercalate(l, x1, x2), x3)
        _fail(4, "needs (x1 @j x3) @m x2")

    if rule_id == 5:
        if isinstance(term, Intercalate) and isinstance(term.right, Intercalate):
            x1, x2, x3 = term.left, term.right.left, term.right.right
            l, m = term.j, term.right.j
            return Intercalate(m + l - 1, Intercalate(l, x1, x2), x3)
        _fail(5, "needs x1 @l (x2 @m x3)")

    if rule_id == 6:
        if isinstance(term, Intercalate) and isinstance(term.left, Intercalate):
            x1, x3, x2 = term.left.left, term.left.right, term.right
            l, m = term.j, term.left.j
            if not m > l:
                _fail(6, f"needs m > l, got m = {m}, l = {l}")
            return Intercalate(m + x2.rank - 1, Intercalate(l, x1, x2), x3)
        _fail(6, "needs (x1 @m x3) @l x2")

    if rule_id == 7:
        return Intercalate(1, SepLeaf(), term)

    j = rule.index or 1
    if not 1 <= j <= term.rank:
        _fail(8, f"gap {j} does not exist in a term of rank {term.rank}")
    return Intercalate(j, term, SepLeaf())


def rewrite(term: Term, rule: RewriteRule) -> Term:
    """Apply rule at the root of term."""
    if rule.direction is Direction.FORWARD:
        result = _forward(rule.rule_id, term)
    else:
        result = _backward(rule, term)
    if result.rank != term.rank:
        _fail(rule.rule_id, f"rank changed from {term.rank} to {result.rank}")
    return result


def apply_rule(term: Term, rule: RewriteRule, position: Path = ()) -> Term:
    """Rewrite the subterm at position (0 = left child, 1 = right child)."""
    try:
        target = subterm_at(term, tuple(position))
    except IndexError:
        raise RuleNotApplicable(f"rule {rule.rule_id}: no subterm at {tuple(position)}")
    return replace_at(term, tuple(position), rewrite(target, rule))

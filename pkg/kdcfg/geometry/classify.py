"""Mutual positions of rank-1 constituents and of pumps with a rank-1 label.

Each case is a list of alternative chains of non-strict inequalities over
the index names of both tuples; primed names belong to the second tuple.
Cases are tried in order, each with the arguments as given and then swapped.
"""

from enum import Enum
from itertools import combinations
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from kdcfg.geometry.tuples import Constituent1, Pump2, IndexTuple
from kdcfg.types import ClassificationEntry

Chain = Tuple[str, ...]

CONSTITUENT_CASES: Dict[int, List[Chain]] = {
    1: [("j2", "i1'")],
    2: [("j1", "i1'", "j2'", "i2")],
    3: [("i1", "i1'", "j2'", "j1"), ("i2", "i1'", "j2'", "j2")],
    4: [("i1", "i1'", "j1'", "j1", "i2", "i2'", "j2'", "j2")],
}

PUMP_CASES: Dict[int, List[Chain]] = {
    1: [("l2", "i1'")],
    2: [("i1", "i1'", "l2'", "j1"), ("k2", "i1'", "l2'", "l2")],
    3: [(
        "i1", "i1'", "j1'", "j1", "k1", "k1'", "l1'", "l1",
        "i2", "i2'", "j2'", "j2", "k2", "k2'", "l2'", "l2",
    )],
    4: [(
        "i1", "i1'", "j1'", "k1'", "j1", "k1", "l1'", "l1",
        "i2", "i2'", "j2", "k2", "j2'", "k2'", "l2'", "l2",
    )],
    5: [(
        "i1", "i1'", "j1", "k1", "j1'", "k1'", "l1'", "l1",
        "i2", "i2'", "j2'", "k2'", "j2", "k2", "l2'", "l2",
    )],
    6: [(
        "i1", "i1'", "j1", "j1'", "k1'", "k1", "l1'", "l1",
        "i2", "i2'", "j2", "j2'", "k2'", "k2", "l2'", "l2",
    )],
    7: [("k1", "i1'", "l1'", "l1", "i2", "i2'", "l2'", "j2")],
    8: [("i1", "i1'", "l1'", "j1", "k2", "i2'", "l2'", "l2")],
    9: [("k1", "i1'", "l2'", "l1"), ("i2", "i1'", "l2'", "j2")],
    10: [("j1", "i1'", "l1'", "k1", "j2", "i2'", "l2'", "k2")],
    11: [("j1", "i1'", "l2'", "k1"), ("j2", "i1'", "l2'", "k2")],
    # read with i1' in front, as the embracing relation uses it
    12: [("l1", "i1'", "l2'", "i2")],
}


class Classification(NamedTuple):
    case: Optional[int]  # None: unclassifiable
    swapped: bool


UNCLASSIFIABLE = Classification(None, False)


def _holds(chain: Chain, env: Dict[str, int]) -> bool:
    values = [env[name] for name in chain]
    return all(a <= b for a, b in zip(values, values[1:]))


def _matches(alternatives: Sequence[Chain], first: IndexTuple, second: IndexTuple) -> bool:
    env = {**first.env(), **second.env("'")}
    return any(_holds(chain, env) for chain in alternatives)


def _classify(cases: Dict[int, List[Chain]], a: IndexTuple, b: IndexTuple) -> Classification:
    for case, alternatives in cases.items():
        if _matches(alternatives, a, b):
            return Classification(case, False)
        if _matches(alternatives, b, a):
            return Classification(case, True)
    return UNCLASSIFIABLE


def classify_constituents(c: Constituent1, c2: Constituent1) -> Classification:
    return _classify(CONSTITUENT_CASES, c, c2)


def classify_pumps(p: Pump2, p2: Pump2) -> Classification:
    return _classify(PUMP_CASES, p, p2)


def is_linear(p: Pump2, p2: Pump2) -> bool:
    return p.l2 <= p2.i1 or p2.l2 <= p.i1


def is_outer(p: Pump2, p2: Pump2) -> bool:
    """p is outer for p2."""
    return p.i1 <= p2.i1 <= p2.l2 <= p.l2


def is_embracing(p: Pump2, p2: Pump2) -> bool:
    """p is embracing for p2."""
    return p.l1 <= p2.i1 <= p2.l2 <= p.i2


class CorollaryOutcome(str, Enum):
    SECOND_OUTER = "second_outer"
    FIRST_EMBRACING = "first_embracing"
    NOT_APPLICABLE = "not_applicable"
    VIOLATION = "violation"


def corollary_check(p: Pump2, p2: Pump2) -> CorollaryOutcome:
    """Which alternative holds when a segment of p2 lies properly inside [l1; i2] of p.

    Segments are read as position sets, so empty segments never qualify.
    """
    middle = (p.l1, p.i2)
    applies = any(
        p.l1 <= a < b <= p.i2 and (a, b) != middle for a, b in p2.segments()
    )
    if not applies:
        return CorollaryOutcome.NOT_APPLICABLE
    if is_outer(p2, p):
        return CorollaryOutcome.SECOND_OUTER
    if is_embracing(p, p2):
        return CorollaryOutcome.FIRST_EMBRACING
    return CorollaryOutcome.VIOLATION


def classification_table(items: Sequence[IndexTuple], classify) -> List[ClassificationEntry]:
    """Classification of every unordered pair of items, in index order."""
    table: List[ClassificationEntry] = []
    for a, b in combinations(items, 2):
        result = classify(a, b)
        table.append(
            {
                "pair": [list(a.as_tuple()), list(b.as_tuple())],
                "case": result.case,
                "swapped": result.swapped,
            }
        )
    return table

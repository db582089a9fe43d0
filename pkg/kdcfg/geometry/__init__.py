"""Index tuples of rank-1 constituents and pumps, and their mutual positions."""

from kdcfg.geometry.tuples import (
    Constituent1,
    IndexTuple,
    Pump2,
    constituents_rank1,
    pumps_rank1,
)
from kdcfg.geometry.classify import (
    UNCLASSIFIABLE,
    Classification,
    CorollaryOutcome,
    classification_table,
    classify_constituents,
    classify_pumps,
    corollary_check,
    is_embracing,
    is_linear,
    is_outer,
)

__all__ = [
    "Constituent1",
    "IndexTuple",
    "Pump2",
    "constituents_rank1",
    "pumps_rank1",
    "UNCLASSIFIABLE",
    "Classification",
    "CorollaryOutcome",
    "classification_table",
    "classify_constituents",
    "classify_pumps",
    "corollary_check",
    "is_embracing",
    "is_linear",
    "is_outer",
]

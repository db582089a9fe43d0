"""Chart recognition and derivation trees for normal-form grammars."""

from kdcfg.parser.ranges import ChartItem, RangeVector
from kdcfg.parser.tree import DerivationTree, Node, anchor, tree_from_dict, tree_to_dict
from kdcfg.parser.chart import Chart, parse, parse_all, recognize

__all__ = [
    "ChartItem",
    "RangeVector",
    "DerivationTree",
    "Node",
    "anchor",
    "tree_from_dict",
    "tree_to_dict",
    "Chart",
    "parse",
    "parse_all",
    "recognize",
]

"""Agenda-driven chart parsing for normal-form grammars.

Items pair a nonterminal with the input segments it derives. Axioms come
from terminal rules; a concatenation rule joins the last segment of one item
to the first segment of the next, an intercalation rule fills the j-th gap of
its left item with the right item. Each item keeps every distinct derivation
(rule index plus antecedent items). Once the chart is closed they are ordered
by rule index, then by discovery order, except that derivations whose
antecedents were all found before the item come first; the first one is
used by parse().
"""

from collections import OrderedDict, defaultdict, deque
from itertools import islice
from typing import Deque, Dict, Iterator, List, NamedTuple, Optional, Tuple, Union

from kdcfg import config
from kdcfg.core.words import SEP_TEXT, SepWord
from kdcfg.grammar.model import CnfGrammar, Rule, rule_shape
from kdcfg.parser.ranges import (
    ChartItem,
    concat_ranges,
    intercalate_ranges,
)
from kdcfg.parser.tree import DerivationTree, Node
from kdcfg.utils.errors import ChartOverflow, NotMember, SeparatorInInput
from kdcfg.utils.logging import logger

Derivation = Tuple[int, Tuple[ChartItem, ...]]


class _Binary(NamedTuple):
    index: int
    rule: Rule
    shape: str


def _symbols(word: Union[str, SepWord]) -> Tuple[str, ...]:
    if isinstance(word, SepWord):
        if word.rank:
            raise SeparatorInInput(f"input {word} contains the separator")
        return tuple(str(s) for s in word.symbols)
    if SEP_TEXT in word:
        raise SeparatorInInput(f"input {word!r} contains the separator {SEP_TEXT!r}")
    return tuple(word)


class Chart:
    """Closed set of items for one grammar and one input word."""

    def __init__(self, g: CnfGrammar, word: Union[str, SepWord]):
        self.grammar = g
        self.tokens = _symbols(word)
        self.n = len(self.tokens)
        self.items: "OrderedDict[ChartItem, List[Derivation]]" = OrderedDict()
        self._found: Dict[ChartItem, int] = {}
        self._per_nonterminal: Dict[str, int] = defaultdict(int)
        self._agenda: Deque[ChartItem] = deque()

        self._as_left: Dict[str, List[_Binary]] = defaultdict(list)
        self._as_right: Dict[str, List[_Binary]] = defaultdict(list)
        # indexes over processed items
        self._by_first_start: Dict[Tuple[str, int], List[ChartItem]] = defaultdict(list)
        self._by_last_end: Dict[Tuple[str, int], List[ChartItem]] = defaultdict(list)
        self._by_span: Dict[Tuple[str, int, int], List[ChartItem]] = defaultdict(list)
        self._by_gap: Dict[Tuple[str, int, int, int], List[ChartItem]] = defaultdict(list)

        self._fill()

    def _add(self, item: ChartItem, derivation: Derivation):
        derivations = self.items.get(item)
        if derivations is None:
            self._count(item)
            self._found[item] = len(self.items)
            self.items[item] = [derivation]
            self._agenda.append(item)
        elif derivation not in derivations:
            derivations.append(derivation)

    def item_bound(self, rank: int) -> int:
        """Number of range vectors of a rank-l item over the input."""
        return (self.n + 1) ** (2 * (rank + 1))

    def _count(self, item: ChartItem):
        name = item.nonterminal
        self._per_nonterminal[name] += 1
        if self._per_nonterminal[name] > self.item_bound(item.rank):
            raise ChartOverflow(
                f"{name} has more than {self.item_bound(item.rank)} items "
                f"for input of length {self.n}"
            )

    def _grounded(self, item: ChartItem, derivation: Derivation) -> bool:
        """True when every antecedent was found before item."""
        return all(self._found[a] < self._found[item] for a in derivation[1])

    def _order_derivations(self):
        for item, derivations in self.items.items():
            derivations.sort(key=lambda d: (not self._grounded(item, d), d[0]))

    def _axioms(self):
        for index, rule in enumerate(self.grammar.rules):
            shape = rule_shape(rule)
            if shape == "symbol":
                symbol = str(rule.rhs.word.symbols[0])
                for i, token in enumerate(self.tokens):
                    if token == symbol:
                        self._add(ChartItem(rule.lhs, ((i, i + 1),)), (index, ()))
            elif shape == "separator":
                for i in range(self.n + 1):
                    for j in range(i, self.n + 1):
                        self._add(ChartItem(rule.lhs, ((i, i), (j, j))), (index, ()))
            elif shape == "empty":
                if self.n == 0 and rule.lhs == self.grammar.start:
                    self._add(ChartItem(rule.lhs, ((0, 0),)), (index, ()))
            elif shape in ("concat", "intercalate"):
                binary = _Binary(index, rule, shape)
                self._as_left[rule.rhs.left.name].append(binary)
                self._as_right[rule.rhs.right.name].append(binary)

    def _index(self, item: ChartItem):
        name = item.nonterminal
        self._by_first_start[(name, item.first_start)].append(item)
        self._by_last_end[(name, item.last_end)].append(item)
        self._by_span[(name, item.first_start, item.last_end)].append(item)
        for j in range(1, item.rank + 1):
            self._by_gap[(name, j) + item.gap(j)].append(item)

    def _combine(self, item: ChartItem):
        for index, rule, shape in self._as_left[item.nonterminal]:
            right = rule.rhs.right.name
            if shape == "concat":
                for other in list(self._by_first_start[(right, item.last_end)]):
                    self._add(
                        ChartItem(rule.lhs, concat_ranges(item.ranges, other.ranges)),
                        (index, (item, other)),
                    )
            else:
                j = rule.rhs.j
                if j > item.rank:
                    continue
                for other in list(self._by_span[(right,) + item.gap(j)]):
                    self._add(
                        ChartItem(rule.lhs, intercalate_ranges(item.ranges, j, other.ranges)),
                        (index, (item, other)),
                    )

        for index, rule, shape in self._as_right[item.nonterminal]:
            left = rule.rhs.left.name
            if shape == "concat":
                for other in list(self._by_last_end[(left, item.first_start)]):
                    self._add(
                        ChartItem(rule.lhs, concat_ranges(other.ranges, item.ranges)),
                        (index, (other, item)),
                    )
            else:
                j = rule.rhs.j
                key = (left, j, item.first_start, item.last_end)
                for other in list(self._by_gap[key]):
                    self._add(
                        ChartItem(rule.lhs, intercalate_ranges(other.ranges, j, item.ranges)),
                        (index, (other, item)),
                    )

    def _fill(self):
        self._axioms()
        while self._agenda:
            item = self._agenda.popleft()
            self._index(item)
            self._combine(item)
        self._order_derivations()
        logger.debug(f"chart: {len(self.items)} items for input of length {self.n}")

    @property
    def goal(self) -> ChartItem:
        return ChartItem(self.grammar.start, ((0, self.n),))

    def accepts(self) -> bool:
        return self.goal in self.items

    def tree(self, item: ChartItem) -> Node:
        """Tree built from the first derivation of every item."""
        index, antecedents = self.items[item][0]
        return self._node(item, index, [self.tree(a) for a in antecedents])

    def trees(self, item: ChartItem, above: frozenset = frozenset()) -> Iterator[Node]:
        """All derivation trees of item in which no item repeats along a branch."""
        above = above | {item}
        for index, antecedents in self.items[item]:
            if any(a in above for a in antecedents):
                continue
            if not antecedents:
                yield self._node(item, index, [])
                continue
            left, right = antecedents
            for left_tree in self.trees(left, above):
                for right_tree in self.trees(right, above):
                    yield self._node(item, index, [left_tree, right_tree])

    def _node(self, item: ChartItem, index: int, children: List[Node]) -> Node:
        rule = self.grammar.rules[index]
        shape = rule_shape(rule)
        if shape == "symbol":
            return Node(item.nonterminal, "symbol", symbol=str(rule.rhs.word.symbols[0]), ranges=item.ranges)
        if shape in ("separator", "empty"):
            return Node(item.nonterminal, shape, ranges=item.ranges)
        return Node(
            item.nonterminal,
            shape,
            children=tuple(children),
            j=rule.rhs.j if shape == "intercalate" else None,
            ranges=item.ranges,
        )


def recognize(g: CnfGrammar, word: Union[str, SepWord]) -> bool:
    return Chart(g, word).accepts()


def parse(g: CnfGrammar, word: Union[str, SepWord]) -> DerivationTree:
    chart = Chart(g, word)
    if not chart.accepts():
        raise NotMember(f"{''.join(chart.tokens) or 'eps'} is not in the language of {g.name}")
    return DerivationTree(chart.tree(chart.goal))


def parse_all(
    g: CnfGrammar, word: Union[str, SepWord], max_trees: Optional[int] = None
) -> List[DerivationTree]:
    """Up to max_trees distinct derivation trees, in a fixed order."""
    bound = config.MAX_TREES if max_trees is None else max_trees
    chart = Chart(g, word)
    if not chart.accepts():
        return []
    return [DerivationTree(root) for root in islice(chart.trees(chart.goal), bound)]

"""Derivation trees of normal-form grammars.

Every node is labelled by the nonterminal it expands and records the rule
shape used there: "concat" and "intercalate" nodes have two children,
"symbol", "separator" and "empty" nodes are leaves. Nodes are addressed by
their path from the root (0 = left child, 1 = right child).
"""

from dataclasses import dataclass, field, replace
from typing import Any, Dict, Iterator, List, Optional, Tuple

from kdcfg.core.words import EMPTY, SEP_WORD, SepWord, word_intercalate
from kdcfg.parser.ranges import RangeVector
from kdcfg.types import TreePayload
from kdcfg.utils.errors import MissingRanges, NodeNotInTree

Path = Tuple[int, ...]

BINARY_OPS = ("concat", "intercalate")
LEAF_OPS = ("symbol", "separator", "empty")


@dataclass(frozen=True)
class Node:
    label: str
    op: str
    children: Tuple["Node", ...] = ()
    j: Optional[int] = None
    symbol: Optional[str] = None
    ranges: Optional[RangeVector] = field(default=None, compare=False)
    word: SepWord = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if self.op == "concat":
            value = self.children[0].word + self.children[1].word
        elif self.op == "intercalate":
            value = word_intercalate(self.children[0].word, self.j, self.children[1].word)
        elif self.op == "symbol":
            value = SepWord((self.symbol,))
        elif self.op == "separator":
            value = SEP_WORD
        elif self.op == "empty":
            value = EMPTY
        else:
            raise ValueError(f"unknown node operation {self.op!r}")
        object.__setattr__(self, "word", value)

    @property
    def rank(self) -> int:
        return self.word.rank

    @property
    def is_internal(self) -> bool:
        return bool(self.children)

    def __str__(self) -> str:
        if self.op == "intercalate":
            return f"{self.label} -> @{self.j}"
        if self.op == "symbol":
            return f"{self.label} -> {self.symbol}"
        return f"{self.label} -> {self.op}"


def anchor(node: Node, ranges: RangeVector) -> Node:
    """Copy of node with ranges assigned top-down from segment lengths."""
    if len(ranges) != node.rank + 1:
        raise MissingRanges(f"{len(ranges)} segments given for a node of rank {node.rank}")
    if not node.children:
        return replace(node, ranges=tuple(ranges))

    left, right = node.children
    lengths_left = [len(s) for s in left.word.segments()]
    lengths_right = [len(s) for s in right.word.segments()]

    if node.op == "concat":
        cut = left.rank
        start, end = ranges[cut]
        middle = start + lengths_left[-1]
        left_ranges = tuple(ranges[:cut]) + ((start, middle),)
        right_ranges = ((middle, end),) + tuple(ranges[cut + 1 :])
    else:
        j, width = node.j, right.rank
        start, end = ranges[j - 1]
        b_before = (start, start + lengths_left[j - 1])
        c_first_start = b_before[1]
        if width == 0:
            c_end = c_first_start + lengths_right[0]
            right_ranges = ((c_first_start, c_end),)
            b_after = (c_end, end)
        else:
            last_start, last_end = ranges[j - 1 + width]
            c_last = (last_start, last_start + lengths_right[-1])
            right_ranges = ((c_first_start, end),) + tuple(ranges[j : j - 1 + width]) + (c_last,)
            b_after = (c_last[1], last_end)
        left_ranges = tuple(ranges[: j - 1]) + (b_before, b_after) + tuple(ranges[j + width :])

    return replace(
        node,
        ranges=tuple(ranges),
        children=(anchor(left, left_ranges), anchor(right, right_ranges)),
    )


class DerivationTree:
    """Immutable tree wrapper with path addressing."""

    def __init__(self, root: Node):
        self.root = root

    @classmethod
    def anchored(cls, root: Node, offset: int = 0) -> "DerivationTree":
        """Tree whose rank-0 root spans positions offset..offset + |word|."""
        if root.rank != 0:
            raise MissingRanges(f"cannot anchor a root of rank {root.rank}")
        return cls(anchor(root, ((offset, offset + len(root.word)),)))

    @property
    def word(self) -> SepWord:
        return self.root.word

    def node(self, path: Path) -> Node:
        current = self.root
        for step in path:
            if step not in (0, 1) or step >= len(current.children):
                raise NodeNotInTree(f"no node at {list(path)}")
            current = current.children[step]
        return current

    def __contains__(self, path: Path) -> bool:
        try:
            self.node(path)
        except NodeNotInTree:
            return False
        return True

    def nodes(self) -> Iterator[Tuple[Path, Node]]:
        """Preorder walk."""
        stack: List[Tuple[Path, Node]] = [((), self.root)]
        while stack:
            path, node = stack.pop()
            yield path, node
            for index in range(len(node.children) - 1, -1, -1):
                stack.append((path + (index,), node.children[index]))

    def internal_nodes(self) -> Iterator[Tuple[Path, Node]]:
        return ((path, node) for path, node in self.nodes() if node.is_internal)

    def replace(self, path: Path, new: Node) -> "DerivationTree":
        """Tree with the subtree at path swapped for new (ranges not recomputed)."""
        self.node(path)

        def rebuild(node: Node, rest: Path) -> Node:
            if not rest:
                return new
            children = list(node.children)
            children[rest[0]] = rebuild(children[rest[0]], rest[1:])
            return replace(node, children=tuple(children))

        return DerivationTree(rebuild(self.root, path))

    def has_ranges(self) -> bool:
        return all(node.ranges is not None for _, node in self.nodes())

    def __len__(self) -> int:
        return sum(1 for _ in self.nodes())

    def __eq__(self, other: Any) -> bool:
        return isinstance(other, DerivationTree) and self.root == other.root

    def __hash__(self) -> int:
        return hash(self.root)

    def __repr__(self) -> str:
        return f"DerivationTree({self.root.label}, word={self.word}, nodes={len(self)})"

    def pretty(self) -> str:
        lines = []
        for path, node in self.nodes():
            lines.append("  " * len(path) + f"{node}  [{node.word}]")
        return "\n".join(lines)


def tree_to_dict(node: Node) -> TreePayload:
    payload: TreePayload = {
        "label": node.label,
        "rank": node.rank,
        "op": node.op,
        "word": node.word.plain(),
    }
    if node.j is not None:
        payload["j"] = node.j
    if node.symbol is not None:
        payload["symbol"] = node.symbol
    if node.ranges is not None:
        payload["ranges"] = [[start, end] for start, end in node.ranges]
    if node.children:
        payload["children"] = [tree_to_dict(child) for child in node.children]
    return payload


def tree_from_dict(payload: Dict[str, Any]) -> Node:
    children = tuple(tree_from_dict(child) for child in payload.get("children", []))
    ranges = payload.get("ranges")
    return Node(
        label=payload["label"],
        op=payload["op"],
        children=children,
        j=payload.get("j"),
        symbol=payload.get("symbol"),
        ranges=tuple((start, end) for start, end in ranges) if ranges is not None else None,
    )

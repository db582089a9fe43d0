"""Direct descendants, same-rank chains and pumps in derivation trees."""

from dataclasses import dataclass
from typing import List, Tuple

from kdcfg.grammar.model import Grammar
from kdcfg.parser.tree import DerivationTree, Path
from kdcfg.utils.errors import InvalidPump


@dataclass(frozen=True)
class Pump:
    """Top and bottom node of an l-pump; the shared label has rank l - 1."""

    top: Path
    bottom: Path
    label: str
    l: int

    def __str__(self) -> str:
        return f"{self.l}-pump {self.label} {list(self.top)} -> {list(self.bottom)}"


def is_direct_descendant(t: DerivationTree, v: Path, v2: Path) -> bool:
    """True iff v2 lies below v (or is v) and every node between has v's rank."""
    top = t.node(v)
    t.node(v2)
    if tuple(v2[: len(v)]) != tuple(v):
        return False
    node = top
    for step in v2[len(v):]:
        node = node.children[step]
        if node.rank != top.rank:
            return False
    return True


def _same_rank_below(t: DerivationTree, v: Path) -> List[Path]:
    """Proper descendants of v reachable through nodes of v's rank, preorder."""
    top = t.node(v)
    found: List[Path] = []
    stack = [(v, top)]
    while stack:
        path, node = stack.pop()
        if path != v:
            found.append(path)
        for index in range(len(node.children) - 1, -1, -1):
            child = node.children[index]
            if child.rank == top.rank:
                stack.append((path + (index,), child))
    return found


def find_pumps(t: DerivationTree) -> List[Pump]:
    """Every pump of t, ordered by top then bottom in preorder."""
    pumps: List[Pump] = []
    for v, node in t.internal_nodes():
        for v2 in _same_rank_below(t, v):
            other = t.node(v2)
            if other.is_internal and other.label == node.label:
                pumps.append(Pump(v, v2, node.label, node.rank + 1))
    return pumps


def check_pump(t: DerivationTree, p: Pump):
    """Raise InvalidPump unless p is a pump of t."""
    if p.top == p.bottom:
        raise InvalidPump("top and bottom of a pump must differ")
    top, bottom = t.node(p.top), t.node(p.bottom)
    if not (top.is_internal and bottom.is_internal):
        raise InvalidPump("pump nodes must be internal")
    if top.label != bottom.label or top.label != p.label:
        raise InvalidPump(f"labels {top.label} and {bottom.label} differ")
    if p.l != top.rank + 1:
        raise InvalidPump(f"{p.label} has rank {top.rank}, so the pump has l = {top.rank + 1}")
    if not is_direct_descendant(t, p.top, p.bottom):
        raise InvalidPump(f"{list(p.bottom)} is not a direct descendant of {list(p.top)}")


def same_rank_chains(t: DerivationTree) -> List[Tuple[Path, ...]]:
    """Maximal downward branches of internal nodes sharing one rank."""
    chains: List[Tuple[Path, ...]] = []

    def extend(chain: Tuple[Path, ...]):
        path = chain[-1]
        node = t.node(path)
        nexts = [
            path + (index,)
            for index, child in enumerate(node.children)
            if child.is_internal and child.rank == node.rank
        ]
        if not nexts:
            chains.append(chain)
        for nxt in nexts:
            extend(chain + (nxt,))

    for path, node in t.internal_nodes():
        parent = t.node(path[:-1]) if path else None
        if parent is None or parent.rank != node.rank:
            extend((path,))
    return chains


def find_matryoshkas(t: DerivationTree, g: Grammar) -> List[Tuple[Path, ...]]:
    """Same-rank chains longer than the number of nonterminals of that rank.

    By pigeonhole each one holds two nodes with the same label, hence a pump.
    """
    return [
        chain
        for chain in same_rank_chains(t)
        if len(chain) > g.count_of_rank(t.node(chain[0]).rank)
    ]


def pump_in_chain(t: DerivationTree, chain: Tuple[Path, ...]) -> Pump:
    """First pair of equally labelled nodes along a chain."""
    seen = {}
    for path in chain:
        node = t.node(path)
        if node.label in seen:
            return Pump(seen[node.label], path, node.label, node.rank + 1)
        seen[node.label] = path
    raise InvalidPump("chain has no repeated label")

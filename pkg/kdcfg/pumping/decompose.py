"""Pump decompositions, pumped words and the trees that derive them."""

from dataclasses import dataclass
from typing import Dict, List, Tuple

from kdcfg.core.words import SepWord
from kdcfg.parser.tree import DerivationTree, Node, Path
from kdcfg.pumping.descent import Pump, check_pump
from kdcfg.pumping.factorize import factorize_between
from kdcfg.types import CertificatePayload
from kdcfg.utils.errors import InvalidPower


@dataclass(frozen=True)
class PumpDecomposition:
    """w = s_0 y_1 u_1 z_1 s_1 ... y_l u_l z_l s_l."""

    l: int
    s: Tuple[SepWord, ...]
    y: Tuple[SepWord, ...]
    u: Tuple[SepWord, ...]
    z: Tuple[SepWord, ...]

    @property
    def pumped_length(self) -> int:
        """|y_1 z_1 ... y_l z_l|."""
        return sum(len(w) for w in self.y) + sum(len(w) for w in self.z)

    @property
    def region_length(self) -> int:
        """|y_1 u_1 z_1 ... y_l u_l z_l|."""
        return self.pumped_length + sum(len(w) for w in self.u)

    def windows(self) -> Dict[Tuple[str, int], Tuple[int, int]]:
        """Positions [start, end) of every y_i and z_i in the unpumped word."""
        spans: Dict[Tuple[str, int], Tuple[int, int]] = {}
        position = len(self.s[0])
        for i in range(self.l):
            spans[("y", i)] = (position, position + len(self.y[i]))
            position += len(self.y[i]) + len(self.u[i])
            spans[("z", i)] = (position, position + len(self.z[i]))
            position += len(self.z[i]) + len(self.s[i + 1])
        return spans

    def covers(self, position: int) -> bool:
        return any(start <= position < end for start, end in self.windows().values())

    def to_payload(self, selected_hit=None) -> CertificatePayload:
        return {
            "l": self.l,
            "s": [w.plain() for w in self.s],
            "y": [w.plain() for w in self.y],
            "u": [w.plain() for w in self.u],
            "z": [w.plain() for w in self.z],
            "selected_hit": selected_hit,
        }


def pump_word(d: PumpDecomposition, p: int) -> SepWord:
    """s_0 y_1^p u_1 z_1^p s_1 ... y_l^p u_l z_l^p s_l."""
    if p < 0:
        raise InvalidPower(f"power must be nonnegative, got {p}")
    result = d.s[0]
    for i in range(d.l):
        result = result + d.y[i] * p + d.u[i] + d.z[i] * p + d.s[i + 1]
    return result


def pump_decompose(t: DerivationTree, p: Pump) -> PumpDecomposition:
    check_pump(t, p)
    outer = factorize_between(t, (), p.top)
    inner = factorize_between(t, p.top, p.bottom)

    s = (outer.prefix,) + tuple(outer.fillers) + (outer.suffix,)
    y: List[SepWord] = [inner.prefix]
    z: List[SepWord] = []
    for before, after in inner.pairs:
        z.append(before)
        y.append(after)
    z.append(inner.suffix)
    u = tuple(t.node(p.bottom).word.segments())
    return PumpDecomposition(p.l, s, tuple(y), u, tuple(z))


def collapse(t: DerivationTree, p: Pump) -> DerivationTree:
    """Tree with the subtree at the top node replaced by the one at the bottom node."""
    check_pump(t, p)
    return DerivationTree.anchored(t.replace(p.top, t.node(p.bottom)).root)


def pull_back(p: Pump, path: Path) -> Path:
    """Path in the tree before collapsing p of a node of the collapsed tree."""
    if tuple(path[: len(p.top)]) == tuple(p.top):
        return tuple(p.bottom) + tuple(path[len(p.top):])
    return tuple(path)


def _graft(node: Node, relative: Path, inner: Node) -> Node:
    if not relative:
        return inner
    children = list(node.children)
    children[relative[0]] = _graft(children[relative[0]], relative[1:], inner)
    return Node(node.label, node.op, tuple(children), node.j, node.symbol)


def pump_tree(t: DerivationTree, p: Pump, power: int) -> DerivationTree:
    """Tree deriving pump_word(pump_decompose(t, p), power)."""
    check_pump(t, p)
    if power < 0:
        raise InvalidPower(f"power must be nonnegative, got {power}")
    top = t.node(p.top)
    relative = tuple(p.bottom[len(p.top):])
    current = t.node(p.bottom)
    for _ in range(power):
        current = _graft(top, relative, current)
    return DerivationTree.anchored(t.replace(p.top, current).root)

"""Searching parse trees for pumping certificates.

A certificate is a pump decomposition with a nonempty pumped part. The
plain search takes the smallest pumped region over the first few parse
trees. The selective search follows the collapse induction: if no pump of
the current tree pumps a selected position, the leftmost pump is collapsed
and the search continues on the smaller tree, with pumps of the smaller tree
pulled back to the original one.
"""

from dataclasses import dataclass, replace
from typing import AbstractSet, List, Optional, Tuple, Union

from kdcfg import config
from kdcfg.core.words import SepWord
from kdcfg.grammar.model import CnfGrammar
from kdcfg.parser.chart import parse_all
from kdcfg.parser.tree import DerivationTree
from kdcfg.pumping.decompose import PumpDecomposition, collapse, pull_back, pump_decompose
from kdcfg.pumping.descent import Pump, find_pumps
from kdcfg.types import CertificatePayload
from kdcfg.utils.errors import NotMember, PositionOutOfRange
from kdcfg.utils.logging import logger

Word = Union[str, SepWord]


@dataclass(frozen=True)
class Certificate:
    decomposition: PumpDecomposition
    tree: DerivationTree
    pump: Pump
    selected_hit: Optional[int] = None
    # windows were slid off the pump's nodes
    realigned: bool = False

    def to_payload(self) -> CertificatePayload:
        return self.decomposition.to_payload(self.selected_hit)


def _trees(g: CnfGrammar, w: Word, max_trees: Optional[int]) -> List[DerivationTree]:
    trees = parse_all(g, w, max_trees)
    if not trees:
        text = w if isinstance(w, str) else w.plain()
        raise NotMember(f"{text or 'eps'} is not in the language of {g.name}")
    return trees


def pumping_certificate(
    g: CnfGrammar, w: Word, max_trees: Optional[int] = None
) -> Optional[Certificate]:
    """Decomposition with |y z| > 0 and the smallest pumped region, or None."""
    best: Optional[Certificate] = None
    for tree in _trees(g, w, max_trees):
        for pump in find_pumps(tree):
            d = pump_decompose(tree, pump)
            if d.pumped_length == 0:
                continue
            if best is None or d.region_length < best.decomposition.region_length:
                best = Certificate(d, tree, pump)
    if best is None:
        logger.info("certificate: no pump with a nonempty pumped part")
    else:
        logger.info(
            f"certificate: {best.pump}, region length {best.decomposition.region_length}"
        )
    return best


def _slide(d: PumpDecomposition, kind: str, i: int, direction: int) -> Optional[PumpDecomposition]:
    """Move window y_i or z_i one letter along a run of equal letters.

    Uses s c (y c)^p = s (c y)^p c and (c z)^p c s = c (z c)^p s, so every
    pumped word stays the same.
    """
    s, y, u, z = list(d.s), list(d.y), list(d.u), list(d.z)
    if kind == "y" and direction < 0:
        if not (s[i] and y[i] and s[i][-1] == y[i][-1]):
            return None
        c = s[i][-1:]
        s[i], y[i], u[i] = s[i][:-1], c + y[i][:-1], c + u[i]
    elif kind == "y":
        if not (y[i] and u[i] and y[i][0] == u[i][0]):
            return None
        c = y[i][:1]
        s[i], y[i], u[i] = s[i] + c, y[i][1:] + c, u[i][1:]
    elif direction < 0:
        if not (z[i] and u[i] and u[i][-1] == z[i][-1]):
            return None
        c = z[i][-1:]
        u[i], z[i], s[i + 1] = u[i][:-1], c + z[i][:-1], c + s[i + 1]
    else:
        if not (z[i] and s[i + 1] and z[i][0] == s[i + 1][0]):
            return None
        c = z[i][:1]
        u[i], z[i], s[i + 1] = u[i] + c, z[i][1:] + c, s[i + 1][1:]
    return replace(d, s=tuple(s), y=tuple(y), u=tuple(u), z=tuple(z))


def _hit(d: PumpDecomposition, selected: AbstractSet[int]) -> Optional[int]:
    covered = [q for q in sorted(selected) if d.covers(q)]
    return covered[0] if covered else None


def realign(
    d: PumpDecomposition, selected: AbstractSet[int]
) -> Optional[Tuple[PumpDecomposition, int]]:
    """d, or d with one window slid, so that a selected position is pumped."""
    hit = _hit(d, selected)
    if hit is not None:
        return d, hit
    limit = sum(len(w) for w in d.s) + sum(len(w) for w in d.u)
    for i in range(d.l):
        for kind in ("y", "z"):
            for direction in (-1, 1):
                current: Optional[PumpDecomposition] = d
                for _ in range(limit):
                    current = _slide(current, kind, i, direction)
                    if current is None:
                        break
                    hit = _hit(current, selected)
                    if hit is not None:
                        return current, hit
    return None


def _search_tree(
    original: DerivationTree, selected: AbstractSet[int], max_steps: int
) -> Optional[Certificate]:
    current = original
    collapsed: List[Pump] = []
    # original position of every position of the current word
    positions = list(range(len(original.word)))

    for step in range(max_steps):
        if not any(q in selected for q in positions):
            return None
        pumps = find_pumps(current)
        if not pumps:
            return None
        for pump in pumps:
            top, bottom = pump.top, pump.bottom
            for earlier in reversed(collapsed):
                top, bottom = pull_back(earlier, top), pull_back(earlier, bottom)
            origin = Pump(top, bottom, pump.label, pump.l)
            d = pump_decompose(original, origin)
            if d.pumped_length == 0:
                continue
            aligned = realign(d, selected)
            if aligned is not None:
                logger.info(f"ogden: {origin} after {step} collapses")
                return Certificate(
                    aligned[0], original, origin, aligned[1], realigned=aligned[0] is not d
                )

        leftmost = pumps[0]
        windows = pump_decompose(current, leftmost).windows().values()
        positions = [
            q
            for index, q in enumerate(positions)
            if not any(start <= index < end for start, end in windows)
        ]
        current = collapse(current, leftmost)
        collapsed.append(leftmost)
        logger.debug(f"ogden: collapsed {leftmost}, word now {current.word}")
    logger.warning(f"ogden: gave up after {max_steps} collapse steps")
    return None


def ogden_certificate(
    g: CnfGrammar,
    w: Word,
    selected: AbstractSet[int],
    max_trees: Optional[int] = None,
    max_steps: Optional[int] = None,
) -> Optional[Certificate]:
    """Certificate whose pumped part contains a selected position of w, or None."""
    n = len(w)
    for q in selected:
        if not 0 <= q < n:
            raise PositionOutOfRange(f"position {q} is outside 0..{n - 1}")
    if not selected:
        return pumping_certificate(g, w, max_trees)
    steps = config.OGDEN_MAX_STEPS if max_steps is None else max_steps
    for tree in _trees(g, w, max_trees):
        found = _search_tree(tree, frozenset(selected), steps)
        if found is not None:
            return found
    return None

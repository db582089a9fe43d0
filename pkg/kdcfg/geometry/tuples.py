"""Index tuples of rank-1 constituents and of pumps with a rank-1 label."""

from dataclasses import astuple, dataclass, fields
from typing import Dict, List, Tuple

from kdcfg.parser.tree import DerivationTree, Path
from kdcfg.pumping.descent import Pump, find_pumps
from kdcfg.utils.errors import MissingRanges


@dataclass(frozen=True)
class IndexTuple:
    def __post_init__(self):
        values = astuple(self)
        if any(a > b for a, b in zip(values, values[1:])):
            raise ValueError(f"{type(self).__name__} indexes must be nondecreasing: {values}")

    def as_tuple(self) -> Tuple[int, ...]:
        return astuple(self)

    def env(self, mark: str = "") -> Dict[str, int]:
        """Index values keyed by field name, suffixed with mark."""
        return {f.name + mark: getattr(self, f.name) for f in fields(self)}


@dataclass(frozen=True)
class Constituent1(IndexTuple):
    """Rank-1 constituent covering [i1; j1] and [i2; j2]."""

    i1: int
    j1: int
    i2: int
    j2: int


@dataclass(frozen=True)
class Pump2(IndexTuple):
    """Pump with a rank-1 label: top (i1, l1, i2, l2) around bottom (j1, k1, j2, k2).

    Also known as a 4-pump, counting the four pumped segments.
    """

    i1: int
    j1: int
    k1: int
    l1: int
    i2: int
    j2: int
    k2: int
    l2: int

    @classmethod
    def from_constituents(cls, top: Constituent1, bottom: Constituent1) -> "Pump2":
        return cls(top.i1, bottom.i1, bottom.j1, top.j1, top.i2, bottom.i2, bottom.j2, top.j2)

    @property
    def top(self) -> Constituent1:
        return Constituent1(self.i1, self.l1, self.i2, self.l2)

    @property
    def bottom(self) -> Constituent1:
        return Constituent1(self.j1, self.k1, self.j2, self.k2)

    def segments(self) -> List[Tuple[int, int]]:
        """The four pumped segments [i1; j1], [k1; l1], [i2; j2], [k2; l2]."""
        return [(self.i1, self.j1), (self.k1, self.l1), (self.i2, self.j2), (self.k2, self.l2)]


def _require_ranges(t: DerivationTree):
    if not t.has_ranges():
        raise MissingRanges("derivation tree carries no input positions")


def _constituent(t: DerivationTree, path: Path) -> Constituent1:
    (i1, j1), (i2, j2) = t.node(path).ranges
    return Constituent1(i1, j1, i2, j2)


def constituents_rank1(t: DerivationTree) -> List[Tuple[Path, Constituent1]]:
    _require_ranges(t)
    return [(path, _constituent(t, path)) for path, node in t.nodes() if node.rank == 1]


def pumps_rank1(t: DerivationTree) -> List[Tuple[Pump, Pump2]]:
    _require_ranges(t)
    return [
        (pump, Pump2.from_constituents(_constituent(t, pump.top), _constituent(t, pump.bottom)))
        for pump in find_pumps(t)
        if pump.l == 2
    ]

"""Range vectors: the input positions a discontinuous constituent covers."""

from dataclasses import dataclass
from typing import Sequence, Tuple

Span = Tuple[int, int]
RangeVector = Tuple[Span, ...]


@dataclass(frozen=True)
class ChartItem:
    """A nonterminal together with the segments of the input it derives.

    A rank-l item has l + 1 segments; the gaps between consecutive segments
    are where its separators sit.
    """

    nonterminal: str
    ranges: RangeVector

    @property
    def rank(self) -> int:
        return len(self.ranges) - 1

    @property
    def first_start(self) -> int:
        return self.ranges[0][0]

    @property
    def last_end(self) -> int:
        return self.ranges[-1][1]

    def gap(self, j: int) -> Span:
        """The j-th gap as (end of segment j-1, start of segment j)."""
        return self.ranges[j - 1][1], self.ranges[j][0]

    def __str__(self) -> str:
        spans = ", ".join(f"[{i};{j}]" for i, j in self.ranges)
        return f"{self.nonterminal}({spans})"


def is_range_vector(ranges: Sequence[Span], n: int) -> bool:
    """Ordered, non-overlapping segments inside 0..n."""
    previous = 0
    for start, end in ranges:
        if start < previous or end < start:
            return False
        previous = end
    return previous <= n


def concat_ranges(b: RangeVector, c: RangeVector) -> RangeVector:
    """Segments of B . C; the last segment of b must end where c starts."""
    return b[:-1] + ((b[-1][0], c[0][1]),) + c[1:]


def intercalate_ranges(b: RangeVector, j: int, c: RangeVector) -> RangeVector:
    """Segments of B @j C; c must exactly fill the j-th gap of b."""
    fill = list(c)
    fill[0] = (b[j - 1][0], fill[0][1])
    fill[-1] = (fill[-1][0], b[j][1])
    return b[: j - 1] + tuple(fill) + b[j + 1 :]

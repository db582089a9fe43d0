"""Words over an alphabet extended with the separator."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, List, Sequence, Tuple, Union

from kdcfg.utils.errors import ArityMismatch, IndexOutOfRank


class Token(Enum):
    """Reserved symbols that never belong to an alphabet."""

    SEP = "1"

    def __str__(self) -> str:
        return self.value


SEP = Token.SEP
SEP_TEXT = "1"
EMPTY_TEXT = "eps"

Symbol = Union[str, Token]


@dataclass(frozen=True)
class SepWord:
    """Immutable word whose symbols are alphabet letters or SEP.

    The rank of a word is its number of separators.
    """

    symbols: Tuple[Symbol, ...] = ()
    rank: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if not isinstance(self.symbols, tuple):
            object.__setattr__(self, "symbols", tuple(self.symbols))
        object.__setattr__(self, "rank", sum(1 for s in self.symbols if s is SEP))

    @classmethod
    def parse(cls, text: str) -> "SepWord":
        """Read the textual rendering: one character per symbol, "1" for SEP, "eps" for ε."""
        text = text.strip()
        if text in (EMPTY_TEXT, ""):
            return EMPTY
        return cls(tuple(SEP if ch == SEP_TEXT else ch for ch in text))

    @classmethod
    def of(cls, symbols: Iterable[Symbol]) -> "SepWord":
        return cls(tuple(symbols))

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[Symbol]:
        return iter(self.symbols)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return SepWord(self.symbols[item])
        return self.symbols[item]

    def __add__(self, other: "SepWord") -> "SepWord":
        return SepWord(self.symbols + other.symbols)

    def __mul__(self, times: int) -> "SepWord":
        return SepWord(self.symbols * times)

    def __str__(self) -> str:
        return render(self)

    @property
    def letters(self) -> int:
        """Number of non-separator symbols."""
        return len(self.symbols) - self.rank

    def plain(self) -> str:
        """Concatenated symbols with "" for the empty word (JSON rendering)."""
        return "".join(str(s) for s in self.symbols)

    def segments(self) -> List["SepWord"]:
        """The rank + 1 separator-free pieces between separators."""
        pieces: List[SepWord] = []
        current: List[Symbol] = []
        for symbol in self.symbols:
            if symbol is SEP:
                pieces.append(SepWord(tuple(current)))
                current = []
            else:
                current.append(symbol)
        pieces.append(SepWord(tuple(current)))
        return pieces


EMPTY = SepWord(())
SEP_WORD = SepWord((SEP,))


def render(word: SepWord) -> str:
    if not word.symbols:
        return EMPTY_TEXT
    return "".join(str(s) for s in word.symbols)


def rank(word: SepWord) -> int:
    """Count of separators in the word."""
    return word.rank


def _separator_index(word: SepWord, j: int) -> int:
    seen = 0
    for index, symbol in enumerate(word.symbols):
        if symbol is SEP:
            seen += 1
            if seen == j:
                return index
    raise IndexOutOfRank(f"gap {j} does not exist in a word of rank {word.rank}")


def word_intercalate(w1: SepWord, j: int, w2: SepWord) -> SepWord:
    """Replace the j-th separator (1-based, left to right) of w1 by w2."""
    if j < 1 or j > w1.rank:
        raise IndexOutOfRank(f"gap {j} does not exist in a word of rank {w1.rank}")
    index = _separator_index(w1, j)
    return SepWord(w1.symbols[:index] + w2.symbols + w1.symbols[index + 1 :])


def word_wrap(word: SepWord, fillers: Sequence[SepWord]) -> SepWord:
    """Replace every separator of word simultaneously by the matching filler."""
    if len(fillers) != word.rank:
        raise ArityMismatch(
            f"{len(fillers)} fillers given for a word of rank {word.rank}"
        )
    out: List[Symbol] = []
    gap = 0
    for symbol in word.symbols:
        if symbol is SEP:
            out.extend(fillers[gap].symbols)
            gap += 1
        else:
            out.append(symbol)
    return SepWord(tuple(out))


def join_with_separators(pieces: Sequence[SepWord]) -> SepWord:
    """Inverse of SepWord.segments: u_0 1 u_1 ... 1 u_l."""
    out: List[Symbol] = []
    for index, piece in enumerate(pieces):
        if index:
            out.append(SEP)
        out.extend(piece.symbols)
    return SepWord(tuple(out))

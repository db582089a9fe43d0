"""Factorizing the context around a subtree into outer words and gap fillers.

Walking up from a node v to an ancestor, the value of the ancestor is kept in
the form prefix . (gamma with its separators replaced by fillers) . suffix,
where gamma stands for whatever sits at v. Each parent peels one
connective: a concatenated sibling extends the prefix or suffix, an
intercalated sibling is inserted at the separator it replaces, and a parent
that intercalates v into a sibling wraps v's context in the sibling's halves.
"""

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from kdcfg.core.words import EMPTY, SEP, SEP_WORD, SepWord, word_intercalate, word_wrap
from kdcfg.parser.tree import DerivationTree, Path
from kdcfg.utils.errors import IndexOutOfRank, InvalidPump, NodeNotInTree


@dataclass(frozen=True)
class ContextFactorization:
    prefix: SepWord
    fillers: Tuple[SepWord, ...]
    suffix: SepWord
    direct: bool

    def apply(self, value: SepWord) -> SepWord:
        """Value of the context with value put in the hole."""
        return self.prefix + word_wrap(value, self.fillers) + self.suffix

    @property
    def pairs(self) -> List[Tuple[SepWord, SepWord]]:
        """(y_i, z_i) with filler i = y_i 1 z_i; only for direct contexts."""
        if not self.direct:
            raise InvalidPump("filler pairs exist only when the hole is a direct descendant")
        result = []
        for filler in self.fillers:
            before, after = filler.segments()
            result.append((before, after))
        return result


def _insert(parts: List[SepWord], j: int, value: SepWord) -> List[SepWord]:
    """Intercalate value at the j-th separator counted across parts."""
    remaining = j
    out = list(parts)
    for index, part in enumerate(out):
        if remaining <= part.rank:
            out[index] = word_intercalate(part, remaining, value)
            return out
        remaining -= part.rank
    raise IndexOutOfRank(f"gap {j} not found in the context")


def _split_at(value: SepWord, j: int) -> Tuple[SepWord, SepWord]:
    seen = 0
    for index, symbol in enumerate(value.symbols):
        if symbol is SEP:
            seen += 1
            if seen == j:
                return value[:index], value[index + 1 :]
    raise IndexOutOfRank(f"gap {j} not found in {value}")


def factorize_between(t: DerivationTree, top: Path, bottom: Path) -> ContextFactorization:
    """Factorization of the context of bottom inside the subtree at top."""
    t.node(top)
    hole = t.node(bottom)
    if tuple(bottom[: len(top)]) != tuple(top):
        raise NodeNotInTree(f"{list(bottom)} is not below {list(top)}")

    prefix, suffix = EMPTY, EMPTY
    fillers: Sequence[SepWord] = [SEP_WORD] * hole.rank
    direct = True
    path = tuple(bottom)
    while len(path) > len(top):
        parent = t.node(path[:-1])
        side = path[-1]
        sibling = parent.children[1 - side].word
        if parent.rank != hole.rank:
            direct = False
        if parent.op == "concat":
            if side == 0:
                suffix = suffix + sibling
            else:
                prefix = sibling + prefix
        elif side == 0:
            parts = _insert([prefix, *fillers, suffix], parent.j, sibling)
            prefix, fillers, suffix = parts[0], parts[1:-1], parts[-1]
        else:
            before, after = _split_at(sibling, parent.j)
            prefix = before + prefix
            suffix = suffix + after
        path = path[:-1]
    return ContextFactorization(prefix, tuple(fillers), suffix, direct)


def factorize_context(t: DerivationTree, v: Path) -> ContextFactorization:
    """Factorization of the context of v in the whole tree."""
    return factorize_between(t, (), v)

"""Terms over concatenation and intercalation, and their evaluation."""

from dataclasses import dataclass, field
from typing import Iterator, List, Mapping, Optional, Tuple

from kdcfg.core.words import (
    EMPTY,
    SEP,
    SEP_WORD,
    SepWord,
    word_intercalate,
)
from kdcfg.utils.errors import (
    IndexOutOfRank,
    NotGround,
    RankConditionError,
    RankMismatch,
)

Path = Tuple[int, ...]


class Term:
    """Base class of the term tree. Every node caches its rank."""

    rank: int

    @property
    def children(self) -> Tuple["Term", ...]:
        return ()

    @property
    def is_leaf(self) -> bool:
        return not self.children

    def __str__(self) -> str:
        return render_term(self)


@dataclass(frozen=True, repr=False)
class WordLeaf(Term):
    word: SepWord = EMPTY
    rank: int = field(init=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.word, SepWord):
            object.__setattr__(self, "word", SepWord.parse(self.word))
        if self.word.rank:
            raise RankConditionError("word leaves may not contain separators")
        object.__setattr__(self, "rank", 0)

    def __repr__(self) -> str:
        return f"WordLeaf({self.word})"


@dataclass(frozen=True, repr=False)
class SepLeaf(Term):
    rank: int = field(init=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "rank", 1)

    def __repr__(self) -> str:
        return "SepLeaf()"


@dataclass(frozen=True, repr=False)
class NonterminalLeaf(Term):
    name: str
    rank: int = 0

    def __repr__(self) -> str:
        return f"NonterminalLeaf({self.name}:{self.rank})"


@dataclass(frozen=True, repr=False)
class Variable(Term):
    """Ranked hole of a multicontext."""

    name: str
    rank: int = 0

    def __repr__(self) -> str:
        return f"Variable({self.name}:{self.rank})"


@dataclass(frozen=True, repr=False)
class Concat(Term):
    left: Term
    right: Term
    rank: int = field(init=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "rank", self.left.rank + self.right.rank)

    @property
    def children(self) -> Tuple[Term, ...]:
        return (self.left, self.right)

    def __repr__(self) -> str:
        return f"Concat({self.left!r}, {self.right!r})"


@dataclass(frozen=True, repr=False)
class Intercalate(Term):
    j: int
    left: Term
    right: Term
    rank: int = field(init=False, compare=False)

    def __post_init__(self):
        if self.j < 1 or self.j > self.left.rank:
            raise IndexOutOfRank(
                f"gap {self.j} does not exist in a left operand of rank {self.left.rank}"
            )
        object.__setattr__(self, "rank", self.left.rank + self.right.rank - 1)

    @property
    def children(self) -> Tuple[Term, ...]:
        return (self.left, self.right)

    def __repr__(self) -> str:
        return f"Intercalate({self.j}, {self.left!r}, {self.right!r})"


# A multicontext is a term whose leaves may be variables, each used once.
Multicontext = Term


def word(text: str) -> WordLeaf:
    return WordLeaf(SepWord.parse(text))


def concat(*terms: Term) -> Term:
    """Left-associated concatenation of one or more terms."""
    result = terms[0]
    for term in terms[1:]:
        result = Concat(result, term)
    return result


def with_children(term: Term, left: Term, right: Term) -> Term:
    if isinstance(term, Concat):
        return Concat(left, right)
    if isinstance(term, Intercalate):
        return Intercalate(term.j, left, right)
    raise TypeError(f"{term!r} has no children")


def positions(term: Term, prefix: Path = ()) -> Iterator[Tuple[Path, Term]]:
    """Preorder walk yielding (path, subterm); 0 is the left child, 1 the right."""
    stack = [(prefix, term)]
    while stack:
        path, node = stack.pop()
        yield path, node
        children = node.children
        for index in range(len(children) - 1, -1, -1):
            stack.append((path + (index,), children[index]))


def subterm_at(term: Term, path: Path) -> Term:
    node = term
    for step in path:
        children = node.children
        if step >= len(children):
            raise IndexError(f"path {path} leaves the term")
        node = children[step]
    return node


def replace_at(term: Term, path: Path, new: Term) -> Term:
    if not path:
        return new
    left, right = term.children
    if path[0] == 0:
        return with_children(term, replace_at(left, path[1:], new), right)
    return with_children(term, left, replace_at(right, path[1:], new))


def leaves(term: Term) -> List[Term]:
    return [node for _, node in positions(term) if node.is_leaf]


def variables(term: Term) -> List[Variable]:
    """Variables in left-to-right occurrence order."""
    return [leaf for leaf in leaves(term) if isinstance(leaf, Variable)]


def nonterminals(term: Term) -> List[NonterminalLeaf]:
    return [leaf for leaf in leaves(term) if isinstance(leaf, NonterminalLeaf)]


def is_ground(term: Term) -> bool:
    return not any(isinstance(leaf, (Variable, NonterminalLeaf)) for leaf in leaves(term))


def evaluate(term: Term, valuation: Optional[Mapping[str, SepWord]] = None) -> SepWord:
    """Value of a term as a word.

    Variables and nonterminal leaves are looked up by name in valuation;
    without a binding they make the term non-ground.
    """
    if isinstance(term, WordLeaf):
        return term.word
    if isinstance(term, SepLeaf):
        return SEP_WORD
    if isinstance(term, (Variable, NonterminalLeaf)):
        if valuation is None or term.name not in valuation:
            raise NotGround(f"{term.name} has no value")
        value = valuation[term.name]
        if value.rank != term.rank:
            raise RankMismatch(
                f"{term.name} has rank {term.rank} but its value {value} has rank {value.rank}"
            )
        return value
    if isinstance(term, Concat):
        return evaluate(term.left, valuation) + evaluate(term.right, valuation)
    if isinstance(term, Intercalate):
        return word_intercalate(
            evaluate(term.left, valuation), term.j, evaluate(term.right, valuation)
        )
    raise TypeError(f"unknown term node {term!r}")


def check_k_correct(term: Term, k: int) -> bool:
    """True iff every subterm has rank at most k and connectives meet the Tm_k conditions."""
    for _, node in positions(term):
        if node.rank > k:
            return False
        if isinstance(node, Concat) and node.left.rank + node.right.rank > k:
            return False
        if isinstance(node, Intercalate) and (
            node.j > k or node.left.rank + node.right.rank > k + 1
        ):
            return False
    return True


def is_k_essential(term: Term, k: int) -> bool:
    """Root and leaf ranks bounded by k; separator leaves are always admitted."""
    if term.rank > k:
        return False
    return all(
        isinstance(leaf, SepLeaf) or leaf.rank <= k for leaf in leaves(term)
    )


def substitute(term: Term, mapping: Mapping[str, Term]) -> Term:
    """Fill variables (and nonterminal leaves) named in mapping."""
    if isinstance(term, (Variable, NonterminalLeaf)):
        if term.name not in mapping:
            return term
        filler = mapping[term.name]
        if filler.rank != term.rank:
            raise RankMismatch(
                f"cannot put a term of rank {filler.rank} into {term.name} of rank {term.rank}"
            )
        return filler
    if term.is_leaf:
        return term
    return with_children(
        term, substitute(term.children[0], mapping), substitute(term.children[1], mapping)
    )


def skeleton(term: Term, prefix: str = "x") -> Tuple[Term, List[NonterminalLeaf]]:
    """Replace nonterminal leaves by fresh variables x1, x2, ... left to right."""
    found: List[NonterminalLeaf] = []

    def walk(node: Term) -> Term:
        if isinstance(node, NonterminalLeaf):
            found.append(node)
            return Variable(f"{prefix}{len(found)}", node.rank)
        if node.is_leaf:
            return node
        left = walk(node.children[0])
        right = walk(node.children[1])
        return with_children(node, left, right)

    return walk(term), found


def spell(value: SepWord) -> Term:
    """Right-nested concatenation of single-symbol leaves spelling value."""
    if not value.symbols:
        return WordLeaf(EMPTY)
    parts = [SepLeaf() if s is SEP else WordLeaf(SepWord((s,))) for s in value.symbols]
    result = parts[-1]
    for part in reversed(parts[:-1]):
        result = Concat(part, result)
    return result


_INTERCALATION, _CONCATENATION, _ATOM = 0, 1, 2


def _level(term: Term) -> int:
    if isinstance(term, Intercalate):
        return _INTERCALATION
    if isinstance(term, Concat):
        return _CONCATENATION
    if isinstance(term, WordLeaf) and len(term.word) > 1:
        return _CONCATENATION
    return _ATOM


def render_term(term: Term, context: int = _INTERCALATION) -> str:
    """Text syntax: juxtaposition concatenates, "@j" intercalates, "1" is SEP, "eps" is ε."""
    if isinstance(term, WordLeaf):
        text = "eps" if not term.word.symbols else " ".join(str(s) for s in term.word.symbols)
    elif isinstance(term, SepLeaf):
        text = "1"
    elif isinstance(term, NonterminalLeaf):
        text = term.name
    elif isinstance(term, Variable):
        text = f"<{term.name}>"
    elif isinstance(term, Concat):
        text = (
            render_term(term.left, _CONCATENATION)
            + " "
            + render_term(term.right, _ATOM)
        )
    elif isinstance(term, Intercalate):
        text = (
            render_term(term.left, _INTERCALATION)
            + f" @{term.j} "
            + render_term(term.right, _CONCATENATION)
        )
    else:
        raise TypeError(f"unknown term node {term!r}")
    if _level(term) < context:
        return f"({text})"
    return text

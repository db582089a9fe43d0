"""Grammar values and their validation."""

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Tuple

from kdcfg.core.terms import (
    Concat,
    Intercalate,
    NonterminalLeaf,
    SepLeaf,
    Term,
    Variable,
    WordLeaf,
    check_k_correct,
    leaves,
)
from kdcfg.core.words import EMPTY_TEXT, SEP_TEXT

RESERVED_CHARACTERS = set("()|@#")


@dataclass(frozen=True)
class Rule:
    lhs: str
    rhs: Term
    line: Optional[int] = None

    def __str__(self) -> str:
        return f"{self.lhs} -> {self.rhs}"


@dataclass(frozen=True, eq=False)
class Grammar:
    """A k-displacement context-free grammar.

    nonterminals maps each name to its rank; its iteration order is the
    declaration order. rules keep file order, which the parser uses to break
    ties between derivations.
    """

    alphabet: FrozenSet[str]
    nonterminals: Dict[str, int]
    rules: Tuple[Rule, ...]
    start: str
    k: int
    name: str = field(default="grammar", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "alphabet", frozenset(self.alphabet))
        object.__setattr__(self, "nonterminals", dict(self.nonterminals))
        object.__setattr__(self, "rules", tuple(self.rules))

    def rank_of(self, nonterminal: str) -> int:
        return self.nonterminals[nonterminal]

    def leaf(self, nonterminal: str) -> NonterminalLeaf:
        return NonterminalLeaf(nonterminal, self.nonterminals[nonterminal])

    def count_of_rank(self, rank: int) -> int:
        return sum(1 for r in self.nonterminals.values() if r == rank)


class CnfGrammar(Grammar):
    """Grammar whose rules are A -> B C, A -> B @j C, A -> a, A -> 1 or S -> eps."""


def rule_shape(rule: Rule) -> Optional[str]:
    """Normal-form shape of a rule, or None if it has none."""
    rhs = rule.rhs
    if isinstance(rhs, (Concat, Intercalate)):
        if isinstance(rhs.left, NonterminalLeaf) and isinstance(rhs.right, NonterminalLeaf):
            return "concat" if isinstance(rhs, Concat) else "intercalate"
        return None
    if isinstance(rhs, SepLeaf):
        return "separator"
    if isinstance(rhs, WordLeaf):
        if len(rhs.word) == 1:
            return "symbol"
        if len(rhs.word) == 0:
            return "empty"
    return None


def _where(index: int, rule: Rule) -> str:
    where = f"rule {index + 1} ({rule.lhs}"
    if rule.line is not None:
        where += f", line {rule.line}"
    return where + ")"


def validate(g: Grammar) -> List[str]:
    """Every violation of the grammar definition, with rule provenance."""
    violations: List[str] = []
    if g.k < 0:
        violations.append(f"order k must be nonnegative, got {g.k}")

    for symbol in sorted(g.alphabet):
        if symbol in (SEP_TEXT, EMPTY_TEXT) or not symbol:
            violations.append(f"alphabet symbol {symbol!r} is reserved")
        elif any(ch.isspace() or ch in RESERVED_CHARACTERS for ch in symbol):
            violations.append(f"alphabet symbol {symbol!r} contains a reserved character")
        if symbol in g.nonterminals:
            violations.append(f"{symbol!r} is both an alphabet symbol and a nonterminal")

    for name, rank in g.nonterminals.items():
        if rank < 0 or rank > g.k:
            violations.append(f"nonterminal {name} has rank {rank} outside 0..{g.k}")

    if g.start not in g.nonterminals:
        violations.append(f"start symbol {g.start} is not declared")
    elif g.nonterminals[g.start] != 0:
        violations.append(
            f"start symbol {g.start} has rank {g.nonterminals[g.start]}, expected 0"
        )

    for index, rule in enumerate(g.rules):
        where = _where(index, rule)
        if rule.lhs not in g.nonterminals:
            violations.append(f"{where}: undefined nonterminal {rule.lhs} on the left")
        for leaf in leaves(rule.rhs):
            if isinstance(leaf, Variable):
                violations.append(f"{where}: body contains variable {leaf.name}")
            elif isinstance(leaf, NonterminalLeaf):
                declared = g.nonterminals.get(leaf.name)
                if declared is None:
                    violations.append(f"{where}: undefined nonterminal {leaf.name}")
                elif declared != leaf.rank:
                    violations.append(
                        f"{where}: {leaf.name} used with rank {leaf.rank}, declared {declared}"
                    )
            elif isinstance(leaf, WordLeaf):
                for symbol in leaf.word.symbols:
                    if symbol not in g.alphabet:
                        violations.append(f"{where}: undefined symbol {symbol!r}")
        if rule.lhs in g.nonterminals and g.nonterminals[rule.lhs] != rule.rhs.rank:
            violations.append(
                f"{where}: rank mismatch, {rule.lhs} has rank "
                f"{g.nonterminals[rule.lhs]} but the body has rank {rule.rhs.rank}"
            )
        if not check_k_correct(rule.rhs, g.k):
            violations.append(f"{where}: body is not {g.k}-correct")

    if isinstance(g, CnfGrammar):
        violations.extend(validate_cnf_shapes(g))
    return violations


def validate_cnf_shapes(g: Grammar) -> List[str]:
    """Violations of the normal-form rule shapes."""
    violations: List[str] = []
    for index, rule in enumerate(g.rules):
        where = _where(index, rule)
        shape = rule_shape(rule)
        if shape is None:
            violations.append(f"{where}: {rule.rhs} is not a normal-form body")
        elif shape == "empty" and rule.lhs != g.start:
            violations.append(f"{where}: only the start symbol may derive eps")
        elif shape in ("concat", "intercalate"):
            if g.start in (rule.rhs.left.name, rule.rhs.right.name):
                violations.append(f"{where}: start symbol {g.start} used in a body")
            if shape == "intercalate" and rule.rhs.j > g.k:
                violations.append(f"{where}: gap {rule.rhs.j} exceeds k = {g.k}")
    return violations

"""Conversion of a grammar to normal form.

Pipeline: start hygiene, terminal isolation with binarization, gap erasure,
empty-word elimination, unit closure and useless-nonterminal removal.

Empty words are the only obstacle to the normal form: a body B @j C whose C
derives eps behaves like B with its j-th separator deleted. Such a "gap
erased" nonterminal [B, E] derives the words of B with the separators listed
in E removed; its rules are B's rules with E distributed over the operands.
"""

from itertools import count
from typing import Dict, FrozenSet, List, Set, Tuple

from kdcfg.core.terms import (
    Concat,
    Intercalate,
    NonterminalLeaf,
    SepLeaf,
    Term,
    WordLeaf,
    evaluate,
    is_ground,
    nonterminals,
    spell,
    with_children,
)
from kdcfg.core.words import EMPTY, SEP, SepWord
from kdcfg.grammar.model import CnfGrammar, Grammar, Rule, validate
from kdcfg.utils.errors import InvalidGrammar
from kdcfg.utils.logging import logger


def _is_empty(rhs: Term) -> bool:
    return isinstance(rhs, WordLeaf) and not rhs.word.symbols


class _CnfBuilder:
    """Mutable rule set shared by the conversion stages."""

    def __init__(self, g: Grammar):
        self.k = g.k
        self.start = g.start
        self.ranks: Dict[str, int] = {}
        self.rules: List[Rule] = []
        self._words: Dict[SepWord, str] = {}
        self._erased: Dict[Tuple[str, FrozenSet[int]], str] = {}
        self._origin: Dict[str, Tuple[str, FrozenSet[int]]] = {}
        self._pending: List[str] = []
        self._counter = count(1)

        occurs = any(
            leaf.name == g.start for rule in g.rules for leaf in nonterminals(rule.rhs)
        )
        if occurs:
            self.start = self._fresh(f"{g.start}0", g.nonterminals)
            self.ranks[self.start] = 0
        self.ranks.update(g.nonterminals)

        for rule in g.rules:
            self.body(rule.lhs, rule.rhs)
            if occurs and rule.lhs == g.start:
                self.body(self.start, rule.rhs)

    @staticmethod
    def _fresh(base: str, taken) -> str:
        name, n = base, 1
        while name in taken:
            n += 1
            name = f"{base}_{n}"
        return name

    def declare(self, base: str, rank: int) -> str:
        name = self._fresh(base, self.ranks)
        self.ranks[name] = rank
        return name

    def leaf(self, name: str) -> NonterminalLeaf:
        return NonterminalLeaf(name, self.ranks[name])

    def add(self, lhs: str, rhs: Term):
        self.rules.append(Rule(lhs, rhs))

    def rules_of(self, lhs: str) -> List[Rule]:
        return [rule for rule in self.rules if rule.lhs == lhs]

    # terminal isolation and binarization

    def word_nonterminal(self, value: SepWord) -> str:
        """Nonterminal deriving exactly value, shared between equal words."""
        if value in self._words:
            return self._words[value]
        if not value.symbols:
            name = self.declare("Eps", 0)
        elif len(value) == 1:
            symbol = value[0]
            if symbol is SEP:
                base = "Sep"
            elif str(symbol).isalnum():
                base = f"T_{symbol}"
            else:
                base = "T"
            name = self.declare(base, value.rank)
        else:
            name = self.declare("W", value.rank)
        self._words[value] = name
        self.body(name, spell(value) if len(value) <= 1 else _split(value))
        return name

    def body(self, lhs: str, term: Term):
        """Add binary rules through which lhs derives term."""
        if isinstance(term, NonterminalLeaf):
            self.add(lhs, term)
            return
        if is_ground(term):
            value = evaluate(term)
            if len(value) <= 1:
                self.add(lhs, spell(value))
                return
            term = _split(value)
        left = self.operand(lhs, term.children[0])
        right = self.operand(lhs, term.children[1])
        self.add(lhs, with_children(term, self.leaf(left), self.leaf(right)))

    def operand(self, lhs: str, term: Term) -> str:
        if isinstance(term, NonterminalLeaf):
            return term.name
        if is_ground(term):
            return self.word_nonterminal(evaluate(term))
        name = self.declare(f"{lhs}_{next(self._counter)}", term.rank)
        self.body(name, term)
        return name

    # gap erasure

    def _key(self, base: str, gaps: FrozenSet[int]) -> Tuple[str, FrozenSet[int]]:
        """Erasing gaps from [origin, dropped] is erasing more gaps from origin."""
        if base not in self._origin:
            return base, frozenset(gaps)
        origin, dropped = self._origin[base]
        remaining = [g for g in range(1, self.ranks[origin] + 1) if g not in dropped]
        return origin, dropped | frozenset(remaining[e - 1] for e in gaps)

    def erased(self, base: str, gaps: FrozenSet[int]) -> str:
        """Name of [base, gaps], created on first use."""
        if not gaps:
            return base
        key = self._key(base, gaps)
        base, gaps = key
        if key not in self._erased:
            suffix = "_".join(str(e) for e in sorted(gaps))
            name = self.declare(f"{base}__drop_{suffix}", self.ranks[base] - len(gaps))
            self._erased[key] = name
            self._origin[name] = key
            self._pending.append(name)
        return self._erased[key]

    def _expand_erased(self, name: str):
        base, gaps = self._origin[name]
        for rule in self.rules_of(base):
            rhs = rule.rhs
            if isinstance(rhs, NonterminalLeaf):
                self.add(name, self.leaf(self.erased(rhs.name, gaps)))
            elif isinstance(rhs, SepLeaf):
                self.add(name, WordLeaf(EMPTY))
            elif isinstance(rhs, Concat):
                split = rhs.left.rank
                left = frozenset(e for e in gaps if e <= split)
                right = frozenset(e - split for e in gaps if e > split)
                self.add(
                    name,
                    Concat(
                        self.leaf(self.erased(rhs.left.name, left)),
                        self.leaf(self.erased(rhs.right.name, right)),
                    ),
                )
            elif isinstance(rhs, Intercalate):
                j, width = rhs.j, rhs.right.rank
                left = frozenset(
                    [e for e in gaps if e < j] + [e - width + 1 for e in gaps if e >= j + width]
                )
                right = frozenset(e - j + 1 for e in gaps if j <= e < j + width)
                gap = j - sum(1 for e in left if e < j)
                self.add(
                    name,
                    Intercalate(
                        gap,
                        self.leaf(self.erased(rhs.left.name, left)),
                        self.leaf(self.erased(rhs.right.name, right)),
                    ),
                )

    def nullable(self) -> Set[str]:
        found: Set[str] = set()
        changed = True
        while changed:
            changed = False
            for rule in self.rules:
                if rule.lhs in found:
                    continue
                rhs = rule.rhs
                if isinstance(rhs, NonterminalLeaf):
                    hit = rhs.name in found
                elif isinstance(rhs, Concat):
                    hit = rhs.left.name in found and rhs.right.name in found
                elif isinstance(rhs, Intercalate):
                    erased = self._erased.get(self._key(rhs.left.name, frozenset({rhs.j})))
                    hit = rhs.right.name in found and erased in found
                else:
                    hit = _is_empty(rhs)
                if hit:
                    found.add(rule.lhs)
                    changed = True
        return found

    def close_erasures(self) -> Set[str]:
        """Create every erased nonterminal needed, then return the nullable set."""
        while True:
            nullable = self.nullable()
            before = len(self._erased)
            for rule in list(self.rules):
                rhs = rule.rhs
                if isinstance(rhs, Intercalate) and rhs.right.name in nullable:
                    self.erased(rhs.left.name, frozenset({rhs.j}))
            while self._pending:
                self._expand_erased(self._pending.pop(0))
            if len(self._erased) == before:
                return nullable

    # empty words, units, useless symbols

    def eliminate_empty(self, nullable: Set[str]):
        kept: List[Rule] = []
        seen = set()

        def keep(lhs: str, rhs: Term):
            if (lhs, rhs) not in seen:
                seen.add((lhs, rhs))
                kept.append(Rule(lhs, rhs))

        for rule in self.rules:
            rhs = rule.rhs
            if _is_empty(rhs):
                continue
            keep(rule.lhs, rhs)
            if isinstance(rhs, Concat):
                if rhs.left.name in nullable:
                    keep(rule.lhs, rhs.right)
                if rhs.right.name in nullable:
                    keep(rule.lhs, rhs.left)
            elif isinstance(rhs, Intercalate) and rhs.right.name in nullable:
                keep(rule.lhs, self.leaf(self.erased(rhs.left.name, frozenset({rhs.j}))))
        self.rules = kept

    def close_units(self):
        units: Dict[str, List[str]] = {name: [] for name in self.ranks}
        for rule in self.rules:
            if isinstance(rule.rhs, NonterminalLeaf):
                units[rule.lhs].append(rule.rhs.name)

        closed: List[Rule] = []
        seen = set()
        for name in self.ranks:
            reach = [name]
            for current in reach:
                for target in units[current]:
                    if target not in reach:
                        reach.append(target)
            for target in reach:
                for rule in self.rules_of(target):
                    if isinstance(rule.rhs, NonterminalLeaf) or (name, rule.rhs) in seen:
                        continue
                    seen.add((name, rule.rhs))
                    closed.append(Rule(name, rule.rhs))
        self.rules = closed

    def remove_useless(self):
        productive: Set[str] = set()
        changed = True
        while changed:
            changed = False
            for rule in self.rules:
                if rule.lhs not in productive and all(
                    leaf.name in productive for leaf in nonterminals(rule.rhs)
                ):
                    productive.add(rule.lhs)
                    changed = True
        rules = [
            rule
            for rule in self.rules
            if rule.lhs in productive
            and all(leaf.name in productive for leaf in nonterminals(rule.rhs))
        ]

        reachable = [self.start]
        for current in reachable:
            for rule in rules:
                if rule.lhs != current:
                    continue
                for leaf in nonterminals(rule.rhs):
                    if leaf.name not in reachable:
                        reachable.append(leaf.name)
        self.rules = [rule for rule in rules if rule.lhs in reachable]
        self.ranks = {name: rank for name, rank in self.ranks.items() if name in reachable}


def _split(value: SepWord) -> Concat:
    return Concat(spell(value[:1]), spell(value[1:]))


def to_cnf(g: Grammar) -> CnfGrammar:
    """Equivalent grammar in normal form over the same alphabet and order."""
    violations = validate(g)
    if violations:
        raise InvalidGrammar(violations)

    builder = _CnfBuilder(g)
    logger.debug(f"cnf: {len(builder.rules)} binary rules after isolation")

    nullable = builder.close_erasures()
    logger.debug(
        f"cnf: {len(nullable)} nullable nonterminals, "
        f"{len(builder._erased)} gap-erased nonterminals"
    )
    builder.eliminate_empty(nullable)
    builder.close_units()
    builder.remove_useless()
    if builder.start in nullable:
        builder.rules.insert(0, Rule(builder.start, WordLeaf(EMPTY)))

    result = CnfGrammar(
        alphabet=g.alphabet,
        nonterminals=builder.ranks,
        rules=tuple(builder.rules),
        start=builder.start,
        k=g.k,
        name=f"{g.name}_cnf",
    )
    logger.debug(
        f"cnf: {result.name} has {len(result.nonterminals)} nonterminals "
        f"and {len(result.rules)} rules"
    )
    return result

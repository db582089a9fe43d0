"""Reading and writing the line-oriented grammar file format.

    alphabet a b
    k 1
    start S
    nonterm S 0
    nonterm T 1
    rule S -> (a T) @1 a | (b T) @1 b
    rule T -> (a T) @1 (1 a) | (b T) @1 (1 b) | 1

Rule bodies are parsed with Lark: juxtaposition concatenates and binds
tighter than "@j", both are left-associative, "1" is the separator and "eps"
the empty word. Alphabet symbols are single lowercase letters or digits other
than 1; nonterminals start with an uppercase letter.
"""

from pathlib import Path
from typing import Dict, List, Mapping, Optional, Tuple, Union

from lark import Lark, Transformer
from lark.exceptions import UnexpectedInput, VisitError

from kdcfg.core.terms import (
    Concat,
    Intercalate,
    NonterminalLeaf,
    SepLeaf,
    Term,
    WordLeaf,
)
from kdcfg.core.words import EMPTY, SepWord
from kdcfg.grammar.model import CnfGrammar, Grammar, Rule, rule_shape
from kdcfg.utils.errors import GrammarFormatError, KdcfgError

TERM_GRAMMAR = r"""
    alternatives: _body ("|" _body)*
    _body: intercalation

    ?intercalation: concatenation
        | intercalation GAP concatenation   -> intercalate

    ?concatenation: atom
        | concatenation atom                -> concat

    ?atom: SEP                              -> separator
        | EPS                               -> empty
        | SYMBOL                            -> symbol
        | NONTERMINAL                       -> nonterminal
        | "(" intercalation ")"

    SEP: "1"
    EPS.2: "eps"
    GAP: /@[1-9][0-9]*/
    SYMBOL: /[a-z02-9]/
    NONTERMINAL: /[A-Z][A-Za-z0-9_']*/

    %import common.WS
    %ignore WS
"""

_parser = Lark(TERM_GRAMMAR, start="alternatives", parser="lalr")


class TermBuilder(Transformer):
    """Turns a parse tree of rule bodies into Term values."""

    def __init__(self, ranks: Mapping[str, int]):
        super().__init__()
        self.ranks = ranks

    def separator(self, _):
        return SepLeaf()

    def empty(self, _):
        return WordLeaf(EMPTY)

    def symbol(self, items):
        return WordLeaf(SepWord((str(items[0]),)))

    def nonterminal(self, items):
        name = str(items[0])
        return NonterminalLeaf(name, self.ranks.get(name, 0))

    def concat(self, items):
        return Concat(items[0], items[1])

    def intercalate(self, items):
        left, gap, right = items
        return Intercalate(int(str(gap)[1:]), left, right)

    def alternatives(self, items):
        return list(items)


def parse_bodies(text: str, ranks: Mapping[str, int], line: Optional[int] = None) -> List[Term]:
    """Parse "body | body | ..." into terms, using ranks for nonterminal leaves."""
    try:
        tree = _parser.parse(text)
    except UnexpectedInput as e:
        raise GrammarFormatError(f"column {e.column}: cannot parse {text!r}", line)
    try:
        return TermBuilder(ranks).transform(tree)
    except VisitError as e:
        if isinstance(e.orig_exc, KdcfgError):
            raise GrammarFormatError(e.orig_exc.message, line)
        raise


def parse_term(text: str, ranks: Optional[Mapping[str, int]] = None) -> Term:
    bodies = parse_bodies(text, ranks or {})
    if len(bodies) != 1:
        raise GrammarFormatError(f"expected one term, found {len(bodies)}")
    return bodies[0]


def _int(value: str, what: str, line: int) -> int:
    try:
        return int(value)
    except ValueError:
        raise GrammarFormatError(f"{what} must be an integer, got {value!r}", line)


def parse_grammar(text: str, name: str = "grammar") -> Grammar:
    """Read grammar text. Structural problems raise GrammarFormatError;
    semantic ones (ranks, undefined symbols) are left to validate().
    """
    alphabet: List[str] = []
    ranks: Dict[str, int] = {}
    k: Optional[int] = None
    start: Optional[str] = None
    rule_lines: List[Tuple[int, str]] = []

    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        keyword, _, rest = line.partition(" ")
        rest = rest.strip()
        if keyword == "alphabet":
            alphabet.extend(rest.split())
        elif keyword == "k":
            k = _int(rest, "k", number)
        elif keyword == "start":
            if not rest or len(rest.split()) != 1:
                raise GrammarFormatError("start needs exactly one nonterminal", number)
            start = rest
        elif keyword == "nonterm":
            fields = rest.split()
            if len(fields) != 2:
                raise GrammarFormatError("nonterm needs a name and a rank", number)
            if fields[0] in ranks:
                raise GrammarFormatError(f"nonterminal {fields[0]} declared twice", number)
            if not fields[0][:1].isupper():
                raise GrammarFormatError(
                    f"nonterminal {fields[0]} must start with an uppercase letter", number
                )
            ranks[fields[0]] = _int(fields[1], "rank", number)
        elif keyword == "rule":
            rule_lines.append((number, rest))
        else:
            raise GrammarFormatError(f"unknown directive {keyword!r}", number)

    if k is None:
        raise GrammarFormatError("missing 'k' directive")
    if start is None:
        raise GrammarFormatError("missing 'start' directive")

    rules: List[Rule] = []
    for number, rest in rule_lines:
        lhs, arrow, body = rest.partition("->")
        lhs = lhs.strip()
        if not arrow or not lhs or not body.strip():
            raise GrammarFormatError("rule must read 'rule A -> body | ...'", number)
        for term in parse_bodies(body, ranks, number):
            rules.append(Rule(lhs, term, number))

    return Grammar(
        alphabet=frozenset(alphabet),
        nonterminals=ranks,
        rules=tuple(rules),
        start=start,
        k=k,
        name=name,
    )


def load_grammar(path: Union[str, Path]) -> Grammar:
    path = Path(path)
    return parse_grammar(path.read_text(encoding="utf-8"), name=path.stem)


def dump_grammar(g: Grammar) -> str:
    """Grammar text that parse_grammar reads back into an equivalent grammar."""
    lines = [
        f"# {g.name}",
        "alphabet " + " ".join(sorted(g.alphabet)),
        f"k {g.k}",
        f"start {g.start}",
    ]
    lines.extend(f"nonterm {name} {rank}" for name, rank in g.nonterminals.items())
    order: List[str] = []
    bodies: Dict[str, List[str]] = {}
    for rule in g.rules:
        if rule.lhs not in bodies:
            order.append(rule.lhs)
            bodies[rule.lhs] = []
        bodies[rule.lhs].append(str(rule.rhs))
    lines.extend(f"rule {lhs} -> " + " | ".join(bodies[lhs]) for lhs in order)
    return "\n".join(lines) + "\n"


def as_cnf(g: Grammar) -> CnfGrammar:
    """Re-type a grammar whose rules all have normal-form shapes."""
    if any(rule_shape(rule) is None for rule in g.rules):
        raise GrammarFormatError(f"{g.name} is not in normal form")
    return CnfGrammar(g.alphabet, g.nonterminals, g.rules, g.start, g.k, name=g.name)

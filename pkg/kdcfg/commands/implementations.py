"""Implementations of the command-line commands.

Every command returns a CommandResult; errors that stop a command are raised
as KdcfgError and turned into a payload by the CLI.
"""

from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Set

from kdcfg import config
from kdcfg.core.words import EMPTY_TEXT
from kdcfg.geometry import (
    CorollaryOutcome,
    classification_table,
    classify_constituents,
    classify_pumps,
    constituents_rank1,
    corollary_check,
    pumps_rank1,
)
from kdcfg.grammar import (
    CnfGrammar,
    Grammar,
    as_cnf,
    dump_grammar,
    enumerate_language,
    load_grammar,
    to_cnf,
    validate,
)
from kdcfg.parser import parse, parse_all, recognize, tree_to_dict
from kdcfg.pumping import (
    PumpDecomposition,
    ogden_certificate,
    pump_word,
    pumping_certificate,
)
from kdcfg.types import CommandResult
from kdcfg.utils.errors import (
    GrammarFormatError,
    InvalidGrammar,
    PositionOutOfRange,
    UnknownSymbol,
    UnsupportedOrder,
    UsageError,
)
from kdcfg.utils.logging import log_execution_time, log_key_value, logger

DEFAULT_POWERS = (0, 2, 3)


def _load_valid(path: str) -> Grammar:
    g = load_grammar(path)
    violations = validate(g)
    if violations:
        raise InvalidGrammar(violations, exit_code=2)
    return g


def _normal_form(g: Grammar) -> CnfGrammar:
    """g itself when it already has normal-form rules, otherwise to_cnf(g)."""
    try:
        cnf = as_cnf(g)
    except GrammarFormatError:
        return to_cnf(g)
    if validate(cnf):
        return to_cnf(g)
    return cnf


def _word(g: Grammar, text: str) -> str:
    if text == EMPTY_TEXT:
        return ""
    unknown = sorted({symbol for symbol in text if symbol not in g.alphabet})
    if unknown:
        raise UnknownSymbol(
            f"symbols {', '.join(unknown)} are not in the alphabet of {g.name}"
        )
    return text


def parse_positions(text: Optional[str]) -> Optional[Set[int]]:
    """Selected positions from "i,j,..."; None when nothing was given."""
    if text is None:
        return None
    try:
        return {int(part) for part in text.split(",") if part.strip()}
    except ValueError:
        raise PositionOutOfRange(f"selected positions must be integers, got {text!r}")


def cmd_validate(path: str, **kwargs) -> CommandResult:
    """Check a grammar file against the grammar definition."""
    g = load_grammar(path)
    violations = validate(g)
    log_key_value("violations", len(violations))
    return {
        "exit_code": 1 if violations else 0,
        "payload": {"valid": not violations, "violations": violations},
    }


def cmd_cnf(path: str, out_path: str, **kwargs) -> CommandResult:
    """Convert a grammar file to normal form and write it to out_path."""
    g = _load_valid(path)
    cnf = to_cnf(g)
    Path(out_path).write_text(dump_grammar(cnf), encoding="utf-8")
    logger.info(f"cnf: wrote {out_path}")
    return {
        "exit_code": 0,
        "payload": {"nonterminals": len(cnf.nonterminals), "rules": len(cnf.rules)},
    }


def cmd_parse(
    path: str, word: str, all_trees: Optional[int] = None, **kwargs
) -> CommandResult:
    """Membership of a word with its derivation tree, or up to --all trees."""
    g = _load_valid(path)
    w = _word(g, word)
    if all_trees is not None and all_trees < 1:
        raise UsageError(f"--all needs a positive number of trees, got {all_trees}")
    cnf = _normal_form(g)
    member = recognize(cnf, w)
    if not member:
        trees = []
    elif all_trees is None:
        trees = [parse(cnf, w)]
    else:
        trees = parse_all(cnf, w, all_trees)
    return {
        "exit_code": 0 if member else 1,
        "payload": {"member": member, "trees": [tree_to_dict(t.root) for t in trees]},
    }


def cmd_generate(path: str, max_len: Optional[int] = None, **kwargs) -> CommandResult:
    """Every word of the language up to a length bound, sorted."""
    g = _load_valid(path)
    bound = config.MAX_LEN if max_len is None else max_len
    words = enumerate_language(g, bound)[g.start]
    return {"exit_code": 0, "payload": {"words": sorted(w.plain() for w in words)}}


def _verify(
    cnf: CnfGrammar, decomposition: PumpDecomposition, powers: Iterable[int]
) -> Dict[str, bool]:
    return {str(p): recognize(cnf, pump_word(decomposition, p)) for p in powers}


@log_execution_time
def cmd_pump(
    path: str,
    word: str,
    power: Optional[Sequence[int]] = None,
    select: Optional[str] = None,
    max_trees: Optional[int] = None,
    **kwargs,
) -> CommandResult:
    """Pumping certificate for a member word, Ogden-style with --select."""
    powers: List[int] = list(DEFAULT_POWERS if power is None else power)
    negative = [p for p in powers if p < 0]
    if negative:
        raise UsageError(f"powers must be nonnegative, got {negative}")
    g = _load_valid(path)
    w = _word(g, word)
    cnf = _normal_form(g)
    selected = parse_positions(select)
    if selected is None:
        certificate = pumping_certificate(cnf, w, max_trees)
    else:
        certificate = ogden_certificate(cnf, w, selected, max_trees)

    if certificate is None:
        reason = "no pump with a nonempty pumped part"
        if selected:
            reason += " covers a selected position"
        return {
            "exit_code": 1,
            "payload": {"found": False, "reason": f"{reason} in the parse trees of {w or 'eps'}"},
        }

    verified = _verify(cnf, certificate.decomposition, powers)
    payload = dict(certificate.to_payload())
    payload.update(
        {
            "found": True,
            "label": certificate.pump.label,
            "realigned": certificate.realigned,
            "top": None if certificate.realigned else list(certificate.pump.top),
            "bottom": None if certificate.realigned else list(certificate.pump.bottom),
            "verified_powers": verified,
        }
    )
    return {"exit_code": 0 if all(verified.values()) else 1, "payload": payload}


def cmd_geometry(path: str, word: str, **kwargs) -> CommandResult:
    """Index tuples of rank-1 constituents and pumps with their classifications."""
    g = _load_valid(path)
    if g.k > 1:
        raise UnsupportedOrder(
            f"geometry covers grammars of order at most 1, {g.name} has order {g.k}"
        )
    w = _word(g, word)
    tree = parse(_normal_form(g), w)

    constituents = [c for _, c in constituents_rank1(tree)]
    pumps = [p2 for _, p2 in pumps_rank1(tree)]
    constituent_table = classification_table(constituents, classify_constituents)
    pump_table = classification_table(pumps, classify_pumps)
    unclassifiable = sum(1 for row in constituent_table + pump_table if row["case"] is None)
    violations = [
        [list(p.as_tuple()), list(p2.as_tuple())]
        for p in pumps
        for p2 in pumps
        if p is not p2 and corollary_check(p, p2) is CorollaryOutcome.VIOLATION
    ]
    return {
        "exit_code": 0,
        "payload": {
            "constituents": [list(c.as_tuple()) for c in constituents],
            "pumps": [list(p.as_tuple()) for p in pumps],
            "constituent_table": constituent_table,
            "pump_table": pump_table,
            "unclassifiable": unclassifiable,
            "corollary_violations": violations,
        },
    }

"""Grammars, their file format, normal form and bounded enumeration."""

from kdcfg.grammar.model import CnfGrammar, Grammar, Rule, rule_shape, validate
from kdcfg.grammar.io import (
    as_cnf,
    dump_grammar,
    load_grammar,
    parse_grammar,
    parse_term,
)
from kdcfg.grammar.cnf import to_cnf
from kdcfg.grammar.enumerate import derives, enumerate_language
from kdcfg.grammar.families import grammar_family

__all__ = [
    "CnfGrammar",
    "Grammar",
    "Rule",
    "rule_shape",
    "validate",
    "as_cnf",
    "dump_grammar",
    "load_grammar",
    "parse_grammar",
    "parse_term",
    "to_cnf",
    "derives",
    "enumerate_language",
    "grammar_family",
]

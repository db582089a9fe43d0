"""Pumps in derivation trees, pump decompositions and certificates."""

from kdcfg.pumping.descent import (
    Pump,
    check_pump,
    find_matryoshkas,
    find_pumps,
    is_direct_descendant,
    pump_in_chain,
    same_rank_chains,
)
from kdcfg.pumping.factorize import ContextFactorization, factorize_between, factorize_context
from kdcfg.pumping.decompose import (
    PumpDecomposition,
    collapse,
    pull_back,
    pump_decompose,
    pump_tree,
    pump_word,
)
from kdcfg.pumping.certificates import (
    Certificate,
    ogden_certificate,
    pumping_certificate,
    realign,
)

__all__ = [
    "Pump",
    "check_pump",
    "find_matryoshkas",
    "find_pumps",
    "is_direct_descendant",
    "pump_in_chain",
    "same_rank_chains",
    "ContextFactorization",
    "factorize_between",
    "factorize_context",
    "PumpDecomposition",
    "collapse",
    "pull_back",
    "pump_decompose",
    "pump_tree",
    "pump_word",
    "Certificate",
    "ogden_certificate",
    "pumping_certificate",
    "realign",
]

from typing import Dict

from kdcfg.commands.implementations import (
    cmd_cnf,
    cmd_generate,
    cmd_geometry,
    cmd_parse,
    cmd_pump,
    cmd_validate,
)
from kdcfg.types import CommandDefinition

_GRAMMAR = {"help": "Path to the grammar file"}
_WORD = {"help": "Input word over the grammar alphabet, or eps for the empty word"}

DEFINITIONS: Dict[str, CommandDefinition] = {
    "validate": {
        "name": "validate",
        "description": "Check a grammar file and list every violation.",
        "arguments": {"path": _GRAMMAR},
        "function": cmd_validate,
    },
    "cnf": {
        "name": "cnf",
        "description": "Convert a grammar to normal form and write it in the grammar file format.",
        "arguments": {
            "path": _GRAMMAR,
            "-o": {
                "dest": "out_path",
                "required": True,
                "help": "Path of the normal-form grammar file to write",
            },
        },
        "function": cmd_cnf,
    },
    "parse": {
        "name": "parse",
        "description": "Decide membership and print derivation trees.",
        "arguments": {
            "path": _GRAMMAR,
            "word": _WORD,
            "--all": {
                "dest": "all_trees",
                "type": int,
                "metavar": "N",
                "help": "Print up to N derivation trees instead of one",
            },
        },
        "function": cmd_parse,
    },
    "generate": {
        "name": "generate",
        "description": "List the words of the language up to a length bound.",
        "arguments": {
            "path": _GRAMMAR,
            "--max-len": {
                "type": int,
                "metavar": "N",
                "help": "Length bound (default: KDCFG_MAX_LEN)",
            },
        },
        "function": cmd_generate,
    },
    "pump": {
        "name": "pump",
        "description": "Find a pumping certificate for a member word and verify pumped words.",
        "arguments": {
            "path": _GRAMMAR,
            "word": _WORD,
            "--power": {
                "type": int,
                "nargs": "+",
                "metavar": "P",
                "help": "Powers to verify with the parser (default: 0 2 3)",
            },
            "--select": {
                "metavar": "I,J,...",
                "help": "Selected positions; the pumped part must cover one of them",
            },
        },
        "function": cmd_pump,
    },
    "geometry": {
        "name": "geometry",
        "description": "Classify rank-1 constituents and pumps of a parse tree (order 1 only).",
        "arguments": {"path": _GRAMMAR, "word": _WORD},
        "function": cmd_geometry,
    },
}

"""Command-line front end.

JSON payloads go to standard output, diagnostics to standard error.
"""

import argparse
import json
import sys
from typing import Any, Dict, List, Optional

from kdcfg import config
from kdcfg.commands.definitions import DEFINITIONS
from kdcfg.types import CommandResult
from kdcfg.utils.errors import KdcfgError
from kdcfg.utils.logging import configure_logging, log_error, log_section

GLOBAL_OPTIONS = ("command", "max_trees", "json", "verbose")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kdcfg",
        description="Displacement context-free grammars: parsing, generation and pumping.",
    )
    parser.add_argument(
        "--max-trees",
        type=int,
        default=config.MAX_TREES,
        help=f"Parse trees explored by searches (default: {config.MAX_TREES})",
    )
    parser.add_argument(
        "--json",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="Print payloads as JSON (default: on)",
    )
    parser.add_argument(
        "--verbose", action="store_true", help="Log progress to standard error"
    )

    subparsers = parser.add_subparsers(dest="command", required=True)
    for name, definition in DEFINITIONS.items():
        sub = subparsers.add_parser(name, help=definition["description"])
        for flag, kwargs in definition["arguments"].items():
            sub.add_argument(flag, **kwargs)
    return parser


def _render_text(payload: Dict[str, Any]) -> str:
    lines = []
    for key, value in payload.items():
        if isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{key}:")
            lines.extend(f"  {json.dumps(item)}" for item in value)
        else:
            lines.append(f"{key}: {value}")
    return "\n".join(lines)


def emit(result: CommandResult, as_json: bool = True) -> None:
    if as_json:
        print(json.dumps(result["payload"], indent=2))
    else:
        print(_render_text(result["payload"]))


def run(args: argparse.Namespace) -> CommandResult:
    definition = DEFINITIONS[args.command]
    kwargs = {k: v for k, v in vars(args).items() if k not in GLOBAL_OPTIONS}
    log_section(f"running {definition['name']}")
    try:
        return definition["function"](max_trees=args.max_trees, **kwargs)
    except KdcfgError as e:
        log_error(e, context=f"{definition['name']} failed")
        payload: Dict[str, Any] = {"error": e.message}
        violations = getattr(e, "violations", None)
        if violations is not None:
            payload["violations"] = violations
        return {"exit_code": e.exit_code, "payload": payload}
    except OSError as e:
        log_error(e, context=f"{definition['name']} failed")
        return {"exit_code": 2, "payload": {"error": str(e)}}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging("INFO" if args.verbose else None)
    result = run(args)
    emit(result, args.json)
    return result["exit_code"]


if __name__ == "__main__":
    sys.exit(main())

from typing import Any, Callable, Dict, List, Optional

from typing_extensions import TypedDict


class CommandResult(TypedDict):
    """Outcome of a CLI command.

    exit_code is 0 for success, 1 for a negative answer (non-member, no
    certificate, invalid grammar) and 2 for usage or format errors.
    """

    exit_code: int
    payload: Dict[str, Any]  # serialized to standard output as JSON


class CommandDefinition(TypedDict):
    """Registry entry for a CLI command."""

    name: str
    description: str
    arguments: Dict[str, Dict[str, Any]]  # argparse add_argument kwargs by flag
    function: Callable[..., CommandResult]


class TreePayload(TypedDict, total=False):
    """Serialized derivation tree node."""

    label: str
    rank: int
    op: str  # "concat", "intercalate", "symbol", "separator" or "empty"
    j: int
    symbol: str
    word: str
    ranges: List[List[int]]
    children: List["TreePayload"]


class CertificatePayload(TypedDict):
    """Serialized pump decomposition."""

    l: int
    s: List[str]
    y: List[str]
    u: List[str]
    z: List[str]
    selected_hit: Optional[int]


class ClassificationEntry(TypedDict):
    """One row of a geometry classification table."""

    pair: List[List[int]]
    case: Optional[int]  # None when the pair is unclassifiable
    swapped: bool

"""Error types raised by the grammar toolkit."""

from typing import Optional


class KdcfgError(Exception):
    """Base error with the process exit code the CLI reports for it."""

    exit_code = 2

    def __init__(self, message: str, exit_code: Optional[int] = None):
        super().__init__(message)
        self.message = message
        if exit_code is not None:
            self.exit_code = exit_code


class IndexOutOfRank(KdcfgError):
    """Intercalation index is not a separator of the left argument."""


class ArityMismatch(KdcfgError):
    """Number of fillers differs from the rank of the wrapped word."""


class NotGround(KdcfgError):
    """A term still contains nonterminals or variables."""


class RankConditionError(KdcfgError):
    """A term or rule violates a rank side condition."""


class RuleNotApplicable(KdcfgError):
    """A rewrite rule does not match at the requested position."""


class NotEssential(KdcfgError):
    """A multicontext has a leaf or root rank above the bound."""


class VariableMismatch(KdcfgError):
    """Two multicontexts do not share the same variables."""


class RankMismatch(KdcfgError):
    """A word's rank differs from the nonterminal's rank."""


class SeparatorInInput(KdcfgError):
    """Parser input contains the separator."""


class ChartOverflow(KdcfgError):
    """A nonterminal has more chart items than there are range vectors."""


class UnknownSymbol(KdcfgError):
    """Input word uses a symbol outside the alphabet."""


class NotMember(KdcfgError):
    """Word is not in the language of the grammar."""

    exit_code = 1


class InvalidPump(KdcfgError):
    """Node pair does not form a pump."""


class NodeNotInTree(KdcfgError):
    """Node path does not address a node of the tree."""


class MissingRanges(KdcfgError):
    """Tree nodes carry no input positions."""


class PositionOutOfRange(KdcfgError):
    """Selected position lies outside the word."""


class UnsupportedOrder(KdcfgError):
    """Operation is restricted to grammars of a lower order."""


class GrammarFormatError(KdcfgError):
    """Grammar text could not be read."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InvalidGrammar(KdcfgError):
    """Grammar fails validation."""

    exit_code = 1

    def __init__(self, violations, exit_code: Optional[int] = None):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations) or "invalid grammar", exit_code)


class InvalidPower(KdcfgError):
    """Pumping power is negative."""


class UsageError(KdcfgError):
    """Command-line arguments are out of range."""

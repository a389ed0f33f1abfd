"""
Exception hierarchy
Everything derives from ValueError so callers that only know about bad
input keep working.
"""

from typing import Any, Optional


class WorkbenchError(ValueError):
    """Base class for every workbench error"""


class CodeParseError(WorkbenchError):
    """Malformed code file or word"""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class UnknownBuiltinError(WorkbenchError):
    pass


class PreconditionError(WorkbenchError):
    """An operation was called outside its domain"""


class NotPrefixFreeError(PreconditionError):
    pass


class NotUniquelyDecodableError(PreconditionError):
    def __init__(self, message: str, verdict: Any = None):
        self.verdict = verdict
        super().__init__(message)


class TreeError(PreconditionError):
    """Malformed tree, missing vertex, or depth bound violated"""


class NotSymmetricError(TreeError):
    pass


class KraftViolationError(PreconditionError):
    pass


class ConstructionError(WorkbenchError):
    """Prefixification could not meet its postcondition"""

    def __init__(self, message: str, trace: Any = None):
        self.trace = trace
        super().__init__(message)

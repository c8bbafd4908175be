"""
DATR Error Hierarchy

Every failure raised by the theory layer derives from ``DatrError`` so the
CLI can map it onto an exit status with one ``except`` clause. Evaluation
undefinedness is NOT an error: the engine returns ``Undefined`` values.
"""

from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class SourceLocation:
    """Position of a token in a theory source"""
    source: str
    line: int
    column: int

    def __str__(self) -> str:
        return f"{self.source}:{self.line}:{self.column}"


class DatrError(Exception):
    """Base class for theory and evaluation failures"""

    def __init__(self, message: str, location: Optional[SourceLocation] = None):
        super().__init__(message)
        self.message = message
        self.location = location

    def __str__(self) -> str:
        if self.location is not None:
            return f"{self.location}: {self.message}"
        return self.message


class TheorySyntaxError(DatrError):
    """Malformed theory source text"""


class DuplicatePathError(DatrError):
    """Two clauses of one node define the same path"""

    def __init__(self, node: str, path: str, location: Optional[SourceLocation] = None,
                 previous: Optional[SourceLocation] = None):
        message = f"duplicate path {path} in node {node}"
        if previous is not None:
            message += f" (first defined at {previous})"
        super().__init__(message, location)
        self.node = node
        self.path = path
        self.previous = previous


class DuplicateNodeError(DatrError):
    """A node block is repeated within one source"""

    def __init__(self, node: str, location: Optional[SourceLocation],
                 previous: Optional[SourceLocation]):
        super().__init__(f"duplicate node {node} (first block at {previous})", location)
        self.node = node
        self.previous = previous


class UnknownNodeError(DatrError):
    """A command names a node the theory does not define"""

    def __init__(self, node: str):
        super().__init__(f"unknown node {node}")
        self.node = node


class EvaluationError(DatrError):
    """Raised by callers that prefer exceptions over Undefined outcomes"""

    def __init__(self, outcome):
        super().__init__(f"{outcome.reason.value} at {outcome.at}:{outcome.path}")
        self.outcome = outcome

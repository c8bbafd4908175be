"""
Theory Linter

Static checks over a parsed theory:
- references to undefined node names
- nodes mixing ``=`` and ``==``
- non-orthogonal inheritance (strict mode only, informational)
"""

from dataclasses import dataclass
from enum import Enum
from typing import List, Optional

import structlog

from datr.errors import SourceLocation
from datr.graph import reference_graph
from datr.model import Theory

log = structlog.get_logger()


class Severity(str, Enum):
    """Diagnostic severity"""
    ERROR = "error"
    WARNING = "warning"
    INFO = "info"


@dataclass(frozen=True)
class Diagnostic:
    """One lint finding"""
    severity: Severity
    code: str
    message: str
    node: str
    location: Optional[SourceLocation] = None

    def __str__(self) -> str:
        where = f"{self.location}: " if self.location is not None else ""
        return f"{where}{self.severity.value}: {self.message} [{self.code}]"


def lint_theory(theory: Theory, strict: bool = False) -> List[Diagnostic]:
    """
    Lint a theory

    Args:
        theory: parsed theory
        strict: also report non-orthogonal inheritance

    Returns:
        Diagnostics in source order
    """
    diagnostics: List[Diagnostic] = []
    graph = reference_graph(theory)

    for name in theory.node_names:
        sentences = theory.sentences(name)

        for sentence in sentences:
            for target in dict.fromkeys(sentence.rvalue.referenced_nodes):
                if not graph.nodes[target]["defined"]:
                    diagnostics.append(Diagnostic(
                        Severity.WARNING, "undefined-node",
                        f"{name}:{sentence.path} refers to undefined node {target}",
                        name, sentence.location,
                    ))

        if len({s.definitional for s in sentences}) > 1:
            diagnostics.append(Diagnostic(
                Severity.WARNING, "mixed-equations",
                f"node {name} mixes '=' and '==' sentences",
                name, theory.location(name),
            ))

        if strict:
            for outer in sentences:
                outer_nodes = set(outer.rvalue.referenced_nodes)
                if not outer_nodes:
                    continue
                for inner in sentences:
                    if inner.path == outer.path or not outer.path.is_prefix_of(inner.path):
                        continue
                    inner_nodes = set(inner.rvalue.referenced_nodes)
                    if inner_nodes and inner_nodes != outer_nodes:
                        diagnostics.append(Diagnostic(
                            Severity.INFO, "non-orthogonal",
                            f"{name}:{inner.path} inherits from "
                            f"{','.join(sorted(inner_nodes))} but {outer.path} from "
                            f"{','.join(sorted(outer_nodes))}",
                            name, inner.location,
                        ))

    log.debug("theory_linted", nodes=len(theory), diagnostics=len(diagnostics))
    return diagnostics

"""DATR theory layer: model, parser, printer, lint and inference engine"""

from datr.errors import (
    DatrError,
    DuplicateNodeError,
    DuplicatePathError,
    EvaluationError,
    SourceLocation,
    TheorySyntaxError,
    UnknownNodeError,
)
from datr.model import (
    EMPTY_PATH,
    AtomValue,
    GlobalNode,
    GlobalNodePath,
    GlobalPath,
    LocalNode,
    LocalNodePath,
    LocalPath,
    Path,
    Rvalue,
    Sentence,
    Theory,
)
from datr.parser import load_theory, parse_theories, parse_theory
from datr.printer import format_theory
from datr.lint import Diagnostic, Severity, lint_theory
from datr.graph import format_hierarchy, hierarchy, hierarchy_dot, reference_graph
from datr.engine import (
    Defined,
    InferenceEngine,
    QueryContext,
    TraceStep,
    Undefined,
    UndefinedReason,
    Value,
    evaluate,
    evaluate_many,
    evaluate_traced,
    format_trace,
)

__all__ = [
    # Errors
    'DatrError',
    'DuplicateNodeError',
    'DuplicatePathError',
    'EvaluationError',
    'SourceLocation',
    'TheorySyntaxError',
    'UnknownNodeError',
    # Model
    'EMPTY_PATH',
    'AtomValue',
    'GlobalNode',
    'GlobalNodePath',
    'GlobalPath',
    'LocalNode',
    'LocalNodePath',
    'LocalPath',
    'Path',
    'Rvalue',
    'Sentence',
    'Theory',
    # Parsing & printing
    'load_theory',
    'parse_theories',
    'parse_theory',
    'format_theory',
    # Lint
    'Diagnostic',
    'Severity',
    'lint_theory',
    # Graphs
    'format_hierarchy',
    'hierarchy',
    'hierarchy_dot',
    'reference_graph',
    # Engine
    'Defined',
    'InferenceEngine',
    'QueryContext',
    'TraceStep',
    'Undefined',
    'UndefinedReason',
    'Value',
    'evaluate',
    'evaluate_many',
    'evaluate_traced',
    'format_trace',
]

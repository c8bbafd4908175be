"""
DATR Inference Engine

Evaluates (node, path) queries against a theory by default inheritance:
- longest-prefix sentence selection with path extension
- local inheritance (global context preserved)
- quoted/global inheritance (global context replaced)
- occurs-check over the full query context and a depth bound

Evaluation never raises for undefinedness; it returns ``Undefined`` with the
reason and the place where evaluation stopped.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple, Union

import structlog

from config import settings
from datr.model import (
    AtomValue, Descriptor, GlobalNode, GlobalNodePath, GlobalPath, LocalNode,
    LocalNodePath, LocalPath, Path, Rvalue, Theory,
)

log = structlog.get_logger()


class UndefinedReason(str, Enum):
    """Why a query has no value"""
    NO_MATCHING_SENTENCE = "no-matching-sentence"
    CYCLE_DETECTED = "cycle-detected"
    DEPTH_EXCEEDED = "depth-exceeded"


@dataclass(frozen=True)
class QueryContext:
    """Local node plus the global (node, path) pair threaded through evaluation"""
    local_node: str
    global_node: str
    global_path: Path


@dataclass(frozen=True)
class Value:
    """Nonempty atom sequence"""
    atoms: Tuple[str, ...]

    def __str__(self) -> str:
        return " ".join(self.atoms)


@dataclass(frozen=True)
class Defined:
    value: Value
    is_defined = True

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class Undefined:
    reason: UndefinedReason
    at: str
    path: Path
    is_defined = False

    def __str__(self) -> str:
        return f"UNDEFINED({self.reason.value})"


EvalOutcome = Union[Defined, Undefined]


@dataclass(frozen=True)
class TraceStep:
    """One matched sentence on the inheritance chain"""
    context: QueryContext
    queried_path: Path
    matched_path: Path
    rvalue: Rvalue
    extension: Path

    @property
    def discarded_extension(self) -> bool:
        return len(self.extension) > 0 and all(isinstance(d, AtomValue) for d in self.rvalue.items)

    def __str__(self) -> str:
        line = (f"{self.context.local_node}:{self.matched_path} + {self.extension}  "
                f"[global {self.context.global_node}:{self.context.global_path}]")
        if self.discarded_extension:
            line += "  (extension discarded)"
        return line


def format_trace(steps: Iterable[TraceStep]) -> str:
    return "".join(f"{step}\n" for step in steps)


# (local node, path, global node, global path)
Frame = Tuple[str, Path, str, Path]


class _Run:
    """Mutable state of one evaluation call; never shared between calls"""

    def __init__(self, memoize: bool = False, traced: bool = False):
        self.stack: List[Frame] = []
        self.on_stack: Set[Frame] = set()
        # outcome plus the stack height its derivation needed
        self.memo: Optional[Dict[Frame, Tuple[EvalOutcome, int]]] = {} if memoize else None
        self.peak = 0
        self.trace: Optional[List[TraceStep]] = [] if traced else None


def _cacheable(outcome: EvalOutcome) -> bool:
    # cycle and depth outcomes depend on the active stack
    return outcome.is_defined or outcome.reason == UndefinedReason.NO_MATCHING_SENTENCE


class InferenceEngine:
    """Read-only evaluator over one immutable theory; safe for concurrent queries"""

    def __init__(self, theory: Theory, max_depth: Optional[int] = None):
        self.theory = theory
        self.max_depth = max_depth or settings.MAX_EVAL_DEPTH

    def evaluate(self, node: str, path: Path) -> EvalOutcome:
        return self._resolve(_Run(), QueryContext(node, node, path), path)

    def evaluate_traced(self, node: str, path: Path) -> Tuple[EvalOutcome, List[TraceStep]]:
        run = _Run(traced=True)
        outcome = self._resolve(run, QueryContext(node, node, path), path)
        return outcome, run.trace

    def evaluate_many(self, node: str, paths: Iterable[Path]) -> Dict[Path, EvalOutcome]:
        """Batch evaluation sharing one memo table keyed on the full context"""
        run = _Run(memoize=True)
        results: Dict[Path, EvalOutcome] = {}
        for path in sorted(set(paths)):
            results[path] = self._resolve(run, QueryContext(node, node, path), path)
        log.debug("batch_evaluated", node=node, paths=len(results), memo=len(run.memo))
        return results

    def _resolve(self, run: _Run, context: QueryContext, path: Path) -> EvalOutcome:
        pushed: List[Frame] = []
        base = len(run.stack)
        outer_peak, run.peak = run.peak, base
        try:
            while True:
                frame = (context.local_node, path, context.global_node, context.global_path)
                if run.memo is not None and frame in run.memo:
                    cached, height = run.memo[frame]
                    if len(run.stack) + height <= self.max_depth:
                        run.peak = max(run.peak, len(run.stack) + height)
                        outcome = cached
                        break
                if frame in run.on_stack:
                    outcome = Undefined(UndefinedReason.CYCLE_DETECTED, context.local_node, path)
                    break
                if len(run.stack) >= self.max_depth:
                    outcome = Undefined(UndefinedReason.DEPTH_EXCEEDED, context.local_node, path)
                    break
                run.stack.append(frame)
                run.on_stack.add(frame)
                run.peak = max(run.peak, len(run.stack))
                pushed.append(frame)

                sentence = self.theory.longest_prefix(context.local_node, path)
                if sentence is None:
                    outcome = Undefined(UndefinedReason.NO_MATCHING_SENTENCE,
                                        context.local_node, path)
                    break
                extension = path.strip_prefix(sentence.path)
                if run.trace is not None:
                    run.trace.append(TraceStep(context, path, sentence.path,
                                               sentence.rvalue, extension))

                items = sentence.rvalue.items
                if len(items) > 1:
                    outcome = self._sequence(run, items, context, path, extension)
                    break
                step = self._step(items[0], context, path, extension)
                if isinstance(step, Defined):
                    outcome = step
                    break
                context, path = step
        finally:
            for frame in pushed:
                run.stack.pop()
                run.on_stack.discard(frame)

        peak, run.peak = run.peak, max(outer_peak, run.peak)
        if run.memo is not None and _cacheable(outcome):
            for offset, frame in enumerate(pushed):
                run.memo[frame] = (outcome, peak - base - offset)
        return outcome

    def _sequence(self, run: _Run, items: Sequence[Descriptor], context: QueryContext,
                  path: Path, extension: Path) -> EvalOutcome:
        # left to right; every item sees the context of the matching step
        atoms: List[str] = []
        for item in items:
            step = self._step(item, context, path, extension)
            if not isinstance(step, Defined):
                step = self._resolve(run, *step)
                if not step.is_defined:
                    return step
            atoms.extend(step.value.atoms)
        return Defined(Value(tuple(atoms)))

    @staticmethod
    def _step(descriptor: Descriptor, context: QueryContext, path: Path,
              extension: Path) -> Union[Defined, Tuple[QueryContext, Path]]:
        """Next (context, path) for a descriptor, or the value for an atom"""
        if isinstance(descriptor, AtomValue):
            return Defined(Value((descriptor.atom,)))
        if isinstance(descriptor, LocalPath):
            return context, descriptor.path + extension
        if isinstance(descriptor, LocalNode):
            return QueryContext(descriptor.node, context.global_node, context.global_path), path
        if isinstance(descriptor, LocalNodePath):
            return (QueryContext(descriptor.node, context.global_node, context.global_path),
                    descriptor.path + extension)
        if isinstance(descriptor, GlobalPath):
            target = descriptor.path + extension
            return QueryContext(context.global_node, context.global_node, target), target
        if isinstance(descriptor, GlobalNode):
            return (QueryContext(descriptor.node, descriptor.node, context.global_path),
                    context.global_path)
        if isinstance(descriptor, GlobalNodePath):
            target = descriptor.path + extension
            return QueryContext(descriptor.node, descriptor.node, target), target
        raise TypeError(f"unknown descriptor {descriptor!r}")


# ============================================================================
# Functional interface
# ============================================================================

def as_path(path: Union[Path, str, Sequence[str]]) -> Path:
    if isinstance(path, Path):
        return path
    if isinstance(path, str):
        return Path.parse(path)
    return Path(tuple(path))


def evaluate(theory: Theory, node: str, path, max_depth: Optional[int] = None) -> EvalOutcome:
    """Evaluate one query"""
    return InferenceEngine(theory, max_depth).evaluate(node, as_path(path))


def evaluate_traced(theory: Theory, node: str, path,
                    max_depth: Optional[int] = None) -> Tuple[EvalOutcome, List[TraceStep]]:
    """Evaluate one query and return the chain of matched sentences"""
    return InferenceEngine(theory, max_depth).evaluate_traced(node, as_path(path))


def evaluate_many(theory: Theory, node: str, paths,
                  max_depth: Optional[int] = None) -> Dict[Path, EvalOutcome]:
    """Evaluate a set of paths at one node with shared memoization"""
    return InferenceEngine(theory, max_depth).evaluate_many(node, [as_path(p) for p in paths])

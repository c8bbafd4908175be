"""
Feature Extraction

Probes the inference engine breadth first over structural paths to recover
the finite bottom-up description of an entry. A position is materialized
when some label feature has a defined value other than the ``undef``
terminator; exploration never descends through unmaterialized positions.
"""

from typing import Dict, List, Optional

import structlog

from config import settings
from datr.engine import InferenceEngine, UndefinedReason
from datr.model import EMPTY_PATH, Path, Theory
from ltag.errors import ProbeError
from ltag.models import UNDEF, FeatureStructure, LtagVocabulary

log = structlog.get_logger()


def extract_features(
    theory: Theory,
    node: str,
    prefix: Path = EMPTY_PATH,
    depth: Optional[int] = None,
    vocabulary: Optional[LtagVocabulary] = None,
    engine: Optional[InferenceEngine] = None,
) -> FeatureStructure:
    """
    Extract the feature structure of an entry

    Args:
        theory: theory to query
        node: entry node
        prefix: path under which the description lives (e.g. ``<surface>``)
        depth: maximum number of structural steps from the entry position
        vocabulary: probe vocabulary
        engine: engine to reuse (must wrap ``theory``)

    Returns:
        Feature structure; empty when nothing is defined at the prefix

    Raises:
        ProbeError: a probe ran into a cycle or the depth bound
    """
    depth = settings.PROBE_DEPTH if depth is None else depth
    if depth < 1:
        raise ValueError("probe depth must be at least 1")
    vocabulary = vocabulary or LtagVocabulary.from_settings()
    engine = engine or InferenceEngine(theory)

    positions: Dict[Path, Dict[str, str]] = {}
    frontier: List[Path] = [EMPTY_PATH]
    probes_run = 0
    while frontier:
        probes = [prefix + position + Path.of(label)
                  for position in frontier for label in vocabulary.labels]
        outcomes = engine.evaluate_many(node, probes)
        probes_run += len(probes)

        next_frontier: List[Path] = []
        for position in frontier:
            labels: Dict[str, str] = {}
            for label in vocabulary.labels:
                outcome = outcomes[prefix + position + Path.of(label)]
                if outcome.is_defined:
                    value = str(outcome.value)
                    if value != UNDEF:
                        labels[label] = value
                elif outcome.reason != UndefinedReason.NO_MATCHING_SENTENCE:
                    raise ProbeError(node, prefix + position, label, outcome)
            if not labels:
                continue
            positions[position] = labels
            if len(position) < depth:
                next_frontier.extend(position + Path.of(f) for f in vocabulary.structural)
        frontier = next_frontier

    log.debug("features_extracted", node=node, prefix=str(prefix),
              positions=len(positions), probes=probes_run)
    return FeatureStructure.from_positions(positions)


def flat_listing(fs: FeatureStructure, node: Optional[str] = None) -> str:
    """Flat DATR listing of a feature structure, one equation per label"""
    lines: List[str] = []
    for position, labels in fs.positions().items():
        for label in sorted(labels):
            lines.append(f"    {position + Path.of(label)} = {labels[label]}")
    if not lines:
        return ""
    lines[-1] += "."
    if node is not None:
        lines.insert(0, f"{node}:")
    return "\n".join(lines) + "\n"

"""
LTAG View Data Models

Data structures for the tree view of a lexical entry:
- Probe vocabulary (structural relations and label features)
- Feature structures extracted from the engine (bottom-up encoding)
- Elementary trees reconstructed top-down
"""

from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterator, List, Mapping, Optional, Tuple

from config import settings
from datr.model import Path

PARENT = "parent"
LEFT = "left"
RIGHT = "right"
CAT = "cat"
TYPE = "type"
ROOT = "root"
FORM = "form"

# Terminator atom of the corpus; treated as absence when probing
UNDEF = "undef"


class NodeType(str, Enum):
    """Elementary tree node types"""
    ANCHOR = "anchor"
    INTERNAL = "internal"
    SUBSTITUTION = "substitution"
    FOOT = "foot"


LEAF_TYPES = frozenset({NodeType.ANCHOR, NodeType.SUBSTITUTION, NodeType.FOOT})


# ============================================================================
# Vocabulary
# ============================================================================

@dataclass(frozen=True)
class LtagVocabulary:
    """Features probed when extracting a tree description"""
    structural: Tuple[str, ...] = (PARENT, LEFT, RIGHT)
    labels: Tuple[str, ...] = (CAT, TYPE, ROOT, FORM)

    def __post_init__(self):
        overlap = set(self.structural) & set(self.labels)
        if overlap:
            raise ValueError(f"features both structural and label: {sorted(overlap)}")
        for required in (PARENT, LEFT, RIGHT):
            if required not in self.structural:
                raise ValueError(f"structural features must include {required}")

    @classmethod
    def from_settings(cls) -> "LtagVocabulary":
        labels = list(settings.LABEL_FEATURES)
        for required in (CAT, TYPE):
            if required not in labels:
                labels.insert(0, required)
        return cls(labels=tuple(labels))


# ============================================================================
# Feature structures
# ============================================================================

def position_key(position: Path) -> Tuple[int, Tuple[str, ...]]:
    """Breadth-first ordering of positions"""
    return len(position), position.attributes


@dataclass
class FeatureStructure:
    """Finite tree of positions, each with label values and structural children"""
    labels: Dict[str, str] = field(default_factory=dict)
    children: Dict[str, "FeatureStructure"] = field(default_factory=dict)

    @property
    def is_empty(self) -> bool:
        return not self.labels and not self.children

    @classmethod
    def from_positions(cls, positions: Mapping[Path, Mapping[str, str]]) -> "FeatureStructure":
        """Build from ``position -> labels``; positions must be prefix-closed"""
        root = cls()
        for position in sorted(positions, key=position_key):
            node = root
            for i, feature in enumerate(position):
                if feature not in node.children:
                    if i != len(position) - 1:
                        raise ValueError(f"position {position} has no materialized parent")
                    node.children[feature] = cls()
                node = node.children[feature]
            node.labels.update(positions[position])
        return root

    def positions(self) -> Dict[Path, Dict[str, str]]:
        """Every materialized position, breadth first"""
        found: Dict[Path, Dict[str, str]] = {}
        queue = deque([(Path(), self)])
        while queue:
            position, node = queue.popleft()
            if node.labels:
                found[position] = dict(node.labels)
            for feature in sorted(node.children):
                queue.append((position + Path.of(feature), node.children[feature]))
        return dict(sorted(found.items(), key=lambda item: position_key(item[0])))

    def at(self, position: Path) -> Optional["FeatureStructure"]:
        node = self
        for feature in position:
            node = node.children.get(feature)
            if node is None:
                return None
        return node

    def label(self, position: Path, feature: str) -> Optional[str]:
        node = self.at(position)
        return None if node is None else node.labels.get(feature)

    def depth(self) -> int:
        return max((len(p) for p in self.positions()), default=0)

    def to_dict(self) -> dict:
        data: dict = dict(self.labels)
        for feature, child in sorted(self.children.items()):
            data[feature] = child.to_dict()
        return data


# ============================================================================
# Elementary trees
# ============================================================================

@dataclass(frozen=True)
class TagTree:
    """Top-down elementary tree node"""
    cat: str
    node_type: NodeType
    root_lexeme: Optional[str] = None
    form: Optional[str] = None
    children: Tuple["TagTree", ...] = ()
    extra: Tuple[Tuple[str, str], ...] = ()

    def validate(self) -> None:
        """Raise ValueError if a node breaks the leaf/internal typing rules"""
        for address, node in self.walk():
            if node.node_type in LEAF_TYPES and node.children:
                raise ValueError(f"{node.node_type.value} node at {address} has children")
            if node.node_type == NodeType.INTERNAL and not node.children:
                raise ValueError(f"internal node at {address} has no children")

    def walk(self, address: Tuple[int, ...] = ()) -> Iterator[Tuple[Tuple[int, ...], "TagTree"]]:
        yield address, self
        for i, child in enumerate(self.children):
            yield from child.walk(address + (i,))

    def subtree(self, address: Tuple[int, ...]) -> "TagTree":
        node = self
        for index in address:
            node = node.children[index]
        return node

    def leaf_addresses(self) -> List[Tuple[int, ...]]:
        return [address for address, node in self.walk() if not node.children]

    def size(self) -> int:
        return sum(1 for _ in self.walk())

    def anchors(self) -> List["TagTree"]:
        return [node for _, node in self.walk() if node.node_type == NodeType.ANCHOR]

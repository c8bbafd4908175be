"""
DATR Theory Data Models

Abstract syntax for DATR theories:
- Paths (attribute sequences)
- Right-hand-side descriptors, local and global (quoted)
- Sentences (path equations) and whole theories
"""

import re
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple, Union

from datr.errors import DuplicateNodeError, DuplicatePathError, SourceLocation

ATOM_PATTERN = re.compile(r"[a-z0-9][A-Za-z0-9\-]*\Z")
NODE_NAME_PATTERN = re.compile(r"[A-Z][A-Za-z0-9+\-]*\Z")


def is_atom(text: str) -> bool:
    return bool(ATOM_PATTERN.match(text))


def is_node_name(text: str) -> bool:
    return bool(NODE_NAME_PATTERN.match(text))


# ============================================================================
# Paths
# ============================================================================

@dataclass(frozen=True, order=True)
class Path:
    """Ordered sequence of attribute atoms; ``<>`` is the empty path"""
    attributes: Tuple[str, ...] = ()

    @classmethod
    def of(cls, *attributes: str) -> "Path":
        return cls(tuple(attributes))

    @classmethod
    def parse(cls, text: str) -> "Path":
        """Build a path from ``"a b c"`` or ``"<a b c>"``"""
        text = text.strip()
        if text.startswith("<") and text.endswith(">"):
            text = text[1:-1]
        return cls(tuple(text.split()))

    def __add__(self, other: "Path") -> "Path":
        return Path(self.attributes + other.attributes)

    def __len__(self) -> int:
        return len(self.attributes)

    def __iter__(self) -> Iterator[str]:
        return iter(self.attributes)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Path(self.attributes[item])
        return self.attributes[item]

    def is_prefix_of(self, other: "Path") -> bool:
        return other.attributes[:len(self.attributes)] == self.attributes

    def strip_prefix(self, prefix: "Path") -> "Path":
        return Path(self.attributes[len(prefix):])

    def __str__(self) -> str:
        return "<" + " ".join(self.attributes) + ">"


EMPTY_PATH = Path()


# ============================================================================
# Descriptors
# ============================================================================

@dataclass(frozen=True)
class AtomValue:
    atom: str
    is_global = False
    node = None

    def __str__(self) -> str:
        return self.atom


@dataclass(frozen=True)
class LocalPath:
    path: Path
    is_global = False
    node = None

    def __str__(self) -> str:
        return str(self.path)


@dataclass(frozen=True)
class LocalNode:
    node: str
    is_global = False

    def __str__(self) -> str:
        return self.node


@dataclass(frozen=True)
class LocalNodePath:
    node: str
    path: Path
    is_global = False

    def __str__(self) -> str:
        return f"{self.node}:{self.path}"


@dataclass(frozen=True)
class GlobalPath:
    path: Path
    is_global = True
    node = None

    def __str__(self) -> str:
        return f'"{self.path}"'


@dataclass(frozen=True)
class GlobalNode:
    node: str
    is_global = True

    def __str__(self) -> str:
        return f'"{self.node}"'


@dataclass(frozen=True)
class GlobalNodePath:
    node: str
    path: Path
    is_global = True

    def __str__(self) -> str:
        return f'"{self.node}:{self.path}"'


Descriptor = Union[AtomValue, LocalPath, LocalNode, LocalNodePath,
                   GlobalPath, GlobalNode, GlobalNodePath]


@dataclass(frozen=True)
class Rvalue:
    """Right-hand side of a sentence: one or more descriptors"""
    items: Tuple[Descriptor, ...]

    def __post_init__(self):
        if not self.items:
            raise ValueError("an rvalue needs at least one descriptor")

    @classmethod
    def single(cls, descriptor: Descriptor) -> "Rvalue":
        return cls((descriptor,))

    @property
    def referenced_nodes(self) -> Tuple[str, ...]:
        return tuple(d.node for d in self.items if d.node is not None)

    def __str__(self) -> str:
        return " ".join(str(item) for item in self.items)


@dataclass(frozen=True)
class Sentence:
    """``Node: <path> == rvalue`` (``=`` and ``==`` evaluate alike)"""
    node: str
    path: Path
    rvalue: Rvalue
    definitional: bool = field(default=True, compare=False)
    location: Optional[SourceLocation] = field(default=None, compare=False, repr=False)

    def __str__(self) -> str:
        token = "==" if self.definitional else "="
        return f"{self.node}: {self.path} {token} {self.rvalue}"


# ============================================================================
# Theories
# ============================================================================

class Theory:
    """Immutable set of node definitions, looked up by (node, exact path)"""

    def __init__(
        self,
        nodes: Optional[Mapping[str, Mapping[Path, Sentence]]] = None,
        source_order: Iterable[str] = (),
        block_locations: Optional[Mapping[str, SourceLocation]] = None,
    ):
        nodes = nodes or {}
        order = list(source_order)
        for name in nodes:
            if name not in order:
                order.append(name)
        for name, definitions in nodes.items():
            for path, sentence in definitions.items():
                if sentence.node != name or sentence.path != path:
                    raise ValueError(f"sentence {sentence} filed under {name}:{path}")
        self._nodes = MappingProxyType(
            {name: MappingProxyType(dict(nodes.get(name, {}))) for name in order}
        )
        self._order = tuple(order)
        self._locations = MappingProxyType(dict(block_locations or {}))

    @classmethod
    def from_sentences(cls, sentences: Iterable[Sentence]) -> "Theory":
        nodes: Dict[str, Dict[Path, Sentence]] = {}
        for sentence in sentences:
            definitions = nodes.setdefault(sentence.node, {})
            if sentence.path in definitions:
                raise DuplicatePathError(sentence.node, str(sentence.path),
                                         sentence.location, definitions[sentence.path].location)
            definitions[sentence.path] = sentence
        return cls(nodes)

    @property
    def node_names(self) -> Tuple[str, ...]:
        return self._order

    def __contains__(self, node: str) -> bool:
        return node in self._nodes

    def __len__(self) -> int:
        return len(self._nodes)

    def definitions(self, node: str) -> Mapping[Path, Sentence]:
        return self._nodes.get(node, MappingProxyType({}))

    def sentences(self, node: str) -> Tuple[Sentence, ...]:
        """Sentences of a node, sorted by path"""
        definitions = self.definitions(node)
        return tuple(definitions[path] for path in sorted(definitions))

    def all_sentences(self) -> Iterator[Sentence]:
        for name in self._order:
            yield from self.sentences(name)

    def lookup(self, node: str, path: Path) -> Optional[Sentence]:
        return self.definitions(node).get(path)

    def longest_prefix(self, node: str, path: Path) -> Optional[Sentence]:
        """Most specific sentence at ``node`` whose path is a prefix of ``path``"""
        definitions = self._nodes.get(node)
        if not definitions:
            return None
        attributes = path.attributes
        for size in range(len(attributes), -1, -1):
            sentence = definitions.get(Path(attributes[:size]))
            if sentence is not None:
                return sentence
        return None

    def location(self, node: str) -> Optional[SourceLocation]:
        return self._locations.get(node)

    def merge(self, other: "Theory") -> "Theory":
        """Extend this theory with another; shared nodes gain the other's sentences"""
        nodes = {name: dict(self._nodes[name]) for name in self._order}
        for name in other.node_names:
            definitions = nodes.setdefault(name, {})
            for path, sentence in other.definitions(name).items():
                if path in definitions:
                    raise DuplicatePathError(name, str(path), sentence.location,
                                             definitions[path].location)
                definitions[path] = sentence
        locations = dict(other._locations)
        locations.update(self._locations)
        order = self._order + tuple(n for n in other.node_names if n not in self._nodes)
        return Theory(nodes, order, locations)

    def with_node(self, node: str, sentences: Iterable[Sentence]) -> "Theory":
        """Copy of this theory with one new node added"""
        if node in self._nodes:
            raise DuplicateNodeError(node, None, self.location(node))
        addition = Theory.from_sentences(sentences)
        if set(addition.node_names) - {node}:
            raise ValueError(f"sentences for {node} name other nodes")
        return self.merge(addition)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Theory):
            return NotImplemented
        return self._as_sets() == other._as_sets()

    def __hash__(self) -> int:
        return hash(frozenset(self._as_sets().items()))

    def _as_sets(self) -> Dict[str, frozenset]:
        return {name: frozenset(defs.values()) for name, defs in self._nodes.items()}

    def __repr__(self) -> str:
        return f"Theory(nodes={len(self._nodes)})"

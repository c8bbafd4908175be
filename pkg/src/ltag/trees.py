"""
Tree Reconstruction and Encoding

Converts between the bottom-up ``parent``/``left``/``right`` description of
an elementary tree and the conventional top-down tree.

A description is read from its distinguished leaf upwards along the
``parent`` spine. At every spine step the ``left`` and ``right`` chains of the
lower position supply its sisters; each chain element is itself a bottom-up
description, and the chain continues from the top of that element's subtree.
"""

from typing import Dict, List, Optional, Sequence, Tuple

from datr.model import EMPTY_PATH, Path
from ltag.errors import EncodingError, ReconstructionError
from ltag.models import (
    CAT, FORM, LEAF_TYPES, LEFT, PARENT, RIGHT, ROOT, TYPE,
    FeatureStructure, NodeType, TagTree,
)

_PARENT = Path.of(PARENT)
_LEFT = Path.of(LEFT)
_RIGHT = Path.of(RIGHT)
_KNOWN_LABELS = (CAT, TYPE, ROOT, FORM)
_NODE_TYPES = frozenset(t.value for t in NodeType)


# ============================================================================
# Bottom-up -> top-down
# ============================================================================

class _Reconstruction:
    def __init__(self, positions: Dict[Path, Dict[str, str]]):
        self.positions = positions

    def has(self, position: Path) -> bool:
        return position in self.positions

    def node(self, position: Path, children: Tuple[TagTree, ...]) -> TagTree:
        labels = self.positions[position]
        cat = labels.get(CAT)
        if cat is None:
            raise ReconstructionError("node has no cat", position)

        declared = labels.get(TYPE)
        if declared is not None and declared not in _NODE_TYPES:
            raise ReconstructionError(f"unknown node type {declared!r}", position)
        if children:
            if declared is not None and NodeType(declared) in LEAF_TYPES:
                raise ReconstructionError(f"{declared} node has children", position)
            node_type = NodeType.INTERNAL
        elif declared is None:
            node_type = NodeType.ANCHOR if position == EMPTY_PATH else NodeType.SUBSTITUTION
        else:
            node_type = NodeType(declared)
            if node_type == NodeType.INTERNAL:
                raise ReconstructionError("internal node has no children", position)

        extra = tuple(sorted((k, v) for k, v in labels.items() if k not in _KNOWN_LABELS))
        return TagTree(
            cat=cat,
            node_type=node_type,
            root_lexeme=labels.get(ROOT) if node_type == NodeType.ANCHOR else None,
            form=labels.get(FORM),
            children=children,
            extra=extra,
        )

    def build_top(self, start: Path) -> Tuple[TagTree, Path]:
        """Tree rooted at the top of the spine above ``start``, and that top"""
        current = start
        tree = self.node(start, ())
        while self.has(current + _PARENT):
            left = self.chain(current + _LEFT, _LEFT)
            right = self.chain(current + _RIGHT, _RIGHT)
            current = current + _PARENT
            tree = self.node(current, tuple(reversed(left)) + (tree,) + tuple(right))
        return tree, current

    def chain(self, start: Path, direction: Path) -> List[TagTree]:
        """Sisters reached from ``start``, nearest first"""
        sisters: List[TagTree] = []
        position = start
        while self.has(position):
            tree, top = self.build_top(position)
            sisters.append(tree)
            position = top + direction
        return sisters


def reconstruct_tree(fs: FeatureStructure) -> TagTree:
    """
    Rebuild the top-down elementary tree from a bottom-up feature structure

    Raises:
        ReconstructionError: with the offending position
    """
    if fs.is_empty or not fs.labels:
        raise ReconstructionError("nothing is materialized", EMPTY_PATH)
    tree, _ = _Reconstruction(fs.positions()).build_top(EMPTY_PATH)
    return tree


# ============================================================================
# Top-down -> bottom-up
# ============================================================================

def _labels(node: TagTree) -> Dict[str, str]:
    labels = {CAT: node.cat, TYPE: node.node_type.value}
    if node.root_lexeme is not None:
        labels[ROOT] = node.root_lexeme
    if node.form is not None:
        labels[FORM] = node.form
    labels.update(dict(node.extra))
    return labels


def _leftmost_leaf(tree: TagTree) -> Tuple[int, ...]:
    address: Tuple[int, ...] = ()
    while tree.children:
        address += (0,)
        tree = tree.children[0]
    return address


def _describe(root: TagTree, leaf: Tuple[int, ...], position: Path,
              out: Dict[Path, Dict[str, str]]) -> Path:
    spine = [root]
    for index in leaf:
        spine.append(spine[-1].children[index])
    out[position] = _labels(spine[-1])

    current = position
    for level in range(len(leaf) - 1, -1, -1):
        parent, index = spine[level], leaf[level]
        _chain(list(reversed(parent.children[:index])), current + _LEFT, _LEFT, out)
        _chain(list(parent.children[index + 1:]), current + _RIGHT, _RIGHT, out)
        current = current + _PARENT
        out[current] = _labels(parent)
    return current


def _chain(sisters: Sequence[TagTree], position: Path, direction: Path,
           out: Dict[Path, Dict[str, str]]) -> None:
    for sister in sisters:
        top = _describe(sister, _leftmost_leaf(sister), position, out)
        position = top + direction


def encode_tree(tree: TagTree, anchor_path: Optional[Sequence[int]] = None) -> FeatureStructure:
    """
    Bottom-up encoding of ``tree`` relative to one of its leaves

    Args:
        tree: top-down tree
        anchor_path: child indices from the root to the distinguished leaf;
            defaults to the first anchor (or the first leaf)

    Raises:
        EncodingError: the address is not a leaf of the tree
    """
    if anchor_path is None:
        anchors = [a for a, n in tree.walk() if n.node_type == NodeType.ANCHOR and not n.children]
        address = anchors[0] if anchors else tree.leaf_addresses()[0]
    else:
        address = tuple(anchor_path)
    try:
        target = tree.subtree(address)
    except IndexError:
        raise EncodingError(f"no node at address {list(address)}") from None
    if target.children:
        raise EncodingError(f"node at address {list(address)} is not a leaf")

    positions: Dict[Path, Dict[str, str]] = {}
    _describe(tree, address, EMPTY_PATH, positions)
    return FeatureStructure.from_positions(positions)

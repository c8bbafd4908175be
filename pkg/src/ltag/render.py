"""
Tree Rendering

Text renderings of elementary trees:
- bracket: LISP-style, ``(s (np!) (vp (v^ give) ...))``
- dot: Graphviz digraph source, anchors double-circled
- json: nested objects with sorted keys
"""

import json
from enum import Enum
from typing import Optional, Union

import graphviz

from config import settings
from ltag.models import NodeType, TagTree


class RenderFormat(str, Enum):
    """Supported output formats"""
    BRACKET = "bracket"
    DOT = "dot"
    JSON = "json"


ASCII_MARKERS = {
    NodeType.ANCHOR: "^",
    NodeType.SUBSTITUTION: "!",
    NodeType.FOOT: "*",
    NodeType.INTERNAL: "",
}

UNICODE_MARKERS = {
    NodeType.ANCHOR: "⋄",
    NodeType.SUBSTITUTION: "↓",
    NodeType.FOOT: "*",
    NodeType.INTERNAL: "",
}


def node_label(node: TagTree) -> str:
    return node.cat if node.form is None else f"{node.cat}/{node.form}"


def to_bracket(tree: TagTree, unicode: bool = False) -> str:
    markers = UNICODE_MARKERS if unicode else ASCII_MARKERS
    parts = [node_label(tree) + markers[tree.node_type]]
    if tree.root_lexeme is not None:
        parts.append(tree.root_lexeme)
    parts.extend(to_bracket(child, unicode) for child in tree.children)
    return "(" + " ".join(parts) + ")"


def to_dot(tree: TagTree, name: str = "tree") -> str:
    graph = graphviz.Digraph(name=name, node_attr={"shape": "ellipse"})
    counter = [0]

    def add(node: TagTree) -> str:
        node_id = f"n{counter[0]}"
        counter[0] += 1
        attrs = {"shape": "doublecircle"} if node.node_type == NodeType.ANCHOR else {}
        graph.node(node_id, label=node_label(node), **attrs)
        for child in node.children:
            graph.edge(node_id, add(child))
        return node_id

    add(tree)
    return graph.source


def to_json_object(tree: TagTree) -> dict:
    data = {"cat": tree.cat, "type": tree.node_type.value}
    data.update(dict(tree.extra))
    if tree.form is not None:
        data["form"] = tree.form
    if tree.root_lexeme is not None:
        data["root"] = tree.root_lexeme
    if tree.children:
        data["children"] = [to_json_object(child) for child in tree.children]
    return data


def to_json(tree: TagTree) -> str:
    return json.dumps(to_json_object(tree), sort_keys=True, separators=(",", ":"),
                      ensure_ascii=False)


def render(tree: TagTree, fmt: Union[RenderFormat, str] = RenderFormat.BRACKET,
           unicode: Optional[bool] = None) -> str:
    """Render a tree in the requested format"""
    fmt = RenderFormat(fmt)
    if fmt == RenderFormat.BRACKET:
        return to_bracket(tree, settings.UNICODE_MARKERS if unicode is None else unicode)
    if fmt == RenderFormat.DOT:
        return to_dot(tree)
    return to_json(tree)

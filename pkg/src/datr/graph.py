"""
Theory Graphs

Directed graphs over node names built with networkx:
- reference graph: N -> M whenever a sentence at N names M
- hierarchy: N -> M for the default parent ``<> == M`` of N
"""

from typing import List, Set

import graphviz
import networkx as nx

from datr.model import EMPTY_PATH, LocalNode, Theory


def reference_graph(theory: Theory) -> nx.DiGraph:
    """Every node, defined or merely referenced, with one edge per reference"""
    graph = nx.DiGraph()
    for name in theory.node_names:
        graph.add_node(name, defined=True)
    for sentence in theory.all_sentences():
        for target in sentence.rvalue.referenced_nodes:
            if target not in graph:
                graph.add_node(target, defined=False)
            graph.add_edge(sentence.node, target)
            graph.edges[sentence.node, target].setdefault("sentences", []).append(sentence)
    return graph


def hierarchy(theory: Theory) -> nx.DiGraph:
    """Default-inheritance hierarchy: child -> parent along ``<> == Parent``"""
    graph = nx.DiGraph()
    for name in theory.node_names:
        graph.add_node(name)
    for name in theory.node_names:
        sentence = theory.lookup(name, EMPTY_PATH)
        if sentence is None or len(sentence.rvalue.items) != 1:
            continue
        descriptor = sentence.rvalue.items[0]
        if isinstance(descriptor, LocalNode) and descriptor.node in theory:
            graph.add_edge(name, descriptor.node)
    return graph


def format_hierarchy(graph: nx.DiGraph) -> str:
    """Indented outline from the roots down, children sorted by name"""
    lines: List[str] = []
    visited: Set[str] = set()

    def walk(node: str, depth: int, seen: frozenset) -> None:
        lines.append("  " * depth + node)
        visited.add(node)
        if node in seen:
            return
        for child in sorted(graph.predecessors(node)):
            walk(child, depth + 1, seen | {node})

    roots = sorted(n for n in graph.nodes if graph.out_degree(n) == 0)
    for root in roots:
        walk(root, 0, frozenset())

    # nodes whose default parents loop never reach a root
    stranded = sorted(n for n in graph.nodes if n not in visited)
    if stranded:
        lines.append("(cycle)")
        for node in stranded:
            if node not in visited:
                walk(node, 1, frozenset())
    return "\n".join(lines) + ("\n" if lines else "")


def hierarchy_dot(graph: nx.DiGraph, name: str = "hierarchy") -> str:
    """Graphviz source for the hierarchy, edges pointing from parent to child"""
    dot = graphviz.Digraph(name=name, node_attr={"shape": "box"})
    for node in sorted(graph.nodes):
        dot.node(node)
    for child, parent in sorted(graph.edges):
        dot.edge(parent, child)
    return dot.source

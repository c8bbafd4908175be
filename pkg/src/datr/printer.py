"""Canonical pretty-printer for theories.

One block per node in source order, sentences sorted by path, two-space
indent, ``==`` throughout and the closing ``.`` on its own line.
"""

from typing import List

from datr.model import Theory


def format_theory(theory: Theory) -> str:
    blocks: List[str] = []
    for name in theory.node_names:
        lines = [f"{name}:"]
        for sentence in theory.sentences(name):
            lines.append(f"  {sentence.path} == {sentence.rvalue}")
        lines.append(".")
        blocks.append("\n".join(lines) + "\n")
    return "\n".join(blocks)

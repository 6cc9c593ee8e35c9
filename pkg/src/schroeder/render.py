"""Graphviz and plain-text drawings of trees."""

from __future__ import annotations

from .trees import Leaf, PointedTree, SchroederNode, WeightedNode

__all__ = ["to_dot", "to_ascii"]

_INTERIOR = "o"


def _walk(t):
    """Preorder (depth, node, is_pointed, parent index) for any tree family."""
    point = None
    if isinstance(t, PointedTree):
        t, point = t.tree, t.point
    stack = [(t, 0, "", None)]
    index = 0
    while stack:
        node, depth, address, parent = stack.pop()
        yield index, depth, node, point is not None and address == point, parent
        me = index
        index += 1
        if isinstance(node, Leaf):
            continue
        if isinstance(node, SchroederNode):
            for child in reversed(node.children):
                stack.append((child, depth + 1, None, me))
        else:
            stack.append((node.right, depth + 1, address + "R", me))
            stack.append((node.left, depth + 1, address + "L", me))


def _label(node) -> str:
    if isinstance(node, Leaf):
        return "*"
    if isinstance(node, WeightedNode):
        return str(node.weight)
    return _INTERIOR


def to_dot(t, name: str = "tree") -> str:
    """A ``digraph``; the pointed node, if any, is drawn with a double outline."""
    lines = [f"digraph {name} {{", "  node [shape=circle];"]
    edges = []
    for index, _, node, pointed, parent in _walk(t):
        attrs = f'label="{_label(node)}"'
        if pointed:
            attrs += ", peripheries=2, pointed=true"
        lines.append(f"  n{index} [{attrs}];")
        if parent is not None:
            edges.append(f"  n{parent} -> n{index};")
    lines.extend(edges)
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_ascii(t) -> str:
    """Indented outline, two spaces per level; the pointed node gets a ``'``."""
    rows = [
        "  " * depth + _label(node) + ("'" if pointed else "")
        for _, depth, node, pointed, _ in _walk(t)
    ]
    return "\n".join(rows) + "\n"

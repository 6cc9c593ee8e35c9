from __future__ import annotations

import pytest
from hypothesis import strategies as st

from schroeder.text import TreeKind, parse_tree
from schroeder.trees import LEAF, BinaryNode, Leaf, SchroederNode, WeightedNode

# criterion lines collected by tests/test_acceptance.py
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def W(text: str):
    return parse_tree(text, TreeKind.WEIGHTED)


def S(text: str):
    return parse_tree(text, TreeKind.SCHROEDER)


def B(text: str):
    return parse_tree(text, TreeKind.BINARY)


def P(text: str):
    return parse_tree(text, TreeKind.POINTED)


def _repair(t):
    """Force well-weightedness by demoting offending weight-2 nodes."""
    if isinstance(t, Leaf):
        return t
    left, right = _repair(t.left), _repair(t.right)
    weight = 1 if isinstance(right, Leaf) else t.weight
    return WeightedNode(weight, left, right)


weighted_trees = st.recursive(
    st.just(LEAF),
    lambda sub: st.builds(WeightedNode, st.sampled_from([1, 2]), sub, sub),
    max_leaves=40,
)
well_weighted_trees = weighted_trees.map(_repair)
binary_trees = st.recursive(
    st.just(LEAF), lambda sub: st.builds(BinaryNode, sub, sub), max_leaves=40
)
schroeder_trees = st.recursive(
    st.just(LEAF),
    lambda sub: st.lists(sub, min_size=2, max_size=4).map(lambda cs: SchroederNode(tuple(cs))),
    max_leaves=40,
)


@pytest.fixture
def first_ten_schroeder():
    return (1, 1, 3, 11, 45, 197, 903, 4279, 20793, 103049)

"""Immutable tree values, node addresses and structural predicates.

Three families share one leaf value:

* Schröder trees: every internal node has an ordered tuple of at least two
  children (:class:`SchroederNode`).
* binary plane trees (:class:`BinaryNode`).
* weighted binary trees, whose internal nodes carry weight 1 or 2
  (:class:`WeightedNode`).

A node inside a binary or weighted tree is addressed by a string over
``"L"`` and ``"R"`` read from the root; the empty string is the root itself.
Addresses survive rebuilding a tree, which node identities would not.

All operations are pure and return new trees.  The hot paths (walking to an
address, rebuilding a spine) are iterative so deep combs do not hit the
interpreter recursion limit.
"""

from __future__ import annotations

import enum
from dataclasses import InitVar, dataclass
from typing import Iterator, Union

from .errors import AddressOutOfTree, ArityError, KindMismatch, NotWellWeighted

__all__ = [
    "LEAF",
    "Leaf",
    "SchroederNode",
    "BinaryNode",
    "WeightedNode",
    "SchroederTree",
    "BinaryTree",
    "WeightedTree",
    "Tree",
    "Address",
    "ROOT",
    "AddressFilter",
    "PointedTree",
    "leaf_count",
    "is_well_weighted",
    "check_well_weighted",
    "subtree_at",
    "replace_subtree",
    "list_addresses",
    "iter_nodes",
    "canonical_key",
    "canonical_compare",
    "format_address",
    "parse_address",
    "parent_address",
]


@dataclass(frozen=True, slots=True)
class Leaf:
    """The one-node tree. Every instance is equal to every other."""

    def __repr__(self) -> str:
        return "LEAF"


LEAF = Leaf()


@dataclass(frozen=True, slots=True)
class SchroederNode:
    children: tuple[SchroederTree, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.children, tuple):
            object.__setattr__(self, "children", tuple(self.children))
        if len(self.children) < 2:
            raise ArityError(
                f"a Schröder node needs at least 2 children, got {len(self.children)}"
            )


@dataclass(frozen=True, slots=True)
class BinaryNode:
    left: BinaryTree
    right: BinaryTree


@dataclass(frozen=True, slots=True)
class WeightedNode:
    weight: int
    left: WeightedTree
    right: WeightedTree

    def __post_init__(self) -> None:
        if self.weight not in (1, 2):
            raise ValueError(f"weight must be 1 or 2, got {self.weight!r}")


SchroederTree = Union[Leaf, SchroederNode]
BinaryTree = Union[Leaf, BinaryNode]
WeightedTree = Union[Leaf, WeightedNode]
Tree = Union[Leaf, SchroederNode, BinaryNode, WeightedNode]

Address = str
ROOT: Address = ""


class AddressFilter(enum.Enum):
    ALL = "all"
    LEAVES = "leaves"
    INTERIOR = "interior"


def format_address(address: Address) -> str:
    """Render an address; the root renders as ``"."``."""
    return address or "."


def parse_address(text: str) -> Address:
    text = text.strip()
    if text == ".":
        return ROOT
    if not text or set(text) - {"L", "R"}:
        raise ValueError(f"not an address: {text!r}")
    return text


def parent_address(address: Address) -> Address:
    if not address:
        raise AddressOutOfTree("the root has no father")
    return address[:-1]


def leaf_count(t: Tree) -> int:
    """Number of leaves of a tree of any family."""
    count = 0
    stack = [t]
    while stack:
        node = stack.pop()
        if isinstance(node, Leaf):
            count += 1
        elif isinstance(node, SchroederNode):
            stack.extend(node.children)
        else:
            stack.append(node.left)
            stack.append(node.right)
    return count


def is_well_weighted(t: WeightedTree) -> bool:
    """True iff no weight-2 node of ``t`` has a leaf as its right son."""
    stack = [t]
    while stack:
        node = stack.pop()
        if isinstance(node, Leaf):
            continue
        if node.weight == 2 and isinstance(node.right, Leaf):
            return False
        stack.append(node.left)
        stack.append(node.right)
    return True


def check_well_weighted(t: WeightedTree) -> None:
    if not isinstance(t, (Leaf, WeightedNode)):
        raise TypeError(f"expected a weighted binary tree, got {type(t).__name__}")
    if not is_well_weighted(t):
        raise NotWellWeighted("a weight-2 node has a leaf as right son")


def subtree_at(t: BinaryTree | WeightedTree, address: Address) -> BinaryTree | WeightedTree:
    node = t
    for depth, step in enumerate(address):
        if isinstance(node, Leaf):
            raise AddressOutOfTree(
                f"address {format_address(address)} leaves the tree after {depth} steps"
            )
        if step == "L":
            node = node.left
        elif step == "R":
            node = node.right
        else:
            raise ValueError(f"bad address step {step!r}")
    return node


def _with_child(node: BinaryNode | WeightedNode, step: str, child):
    if isinstance(node, WeightedNode):
        if step == "L":
            return WeightedNode(node.weight, child, node.right)
        return WeightedNode(node.weight, node.left, child)
    if step == "L":
        return BinaryNode(child, node.right)
    return BinaryNode(node.left, child)


def replace_subtree(t, address: Address, replacement):
    """Return ``t`` with the subtree at ``address`` swapped for ``replacement``."""
    spine = []
    node = t
    for depth, step in enumerate(address):
        if isinstance(node, Leaf):
            raise AddressOutOfTree(
                f"address {format_address(address)} leaves the tree after {depth} steps"
            )
        spine.append(node)
        node = node.left if step == "L" else node.right
    result = replacement
    for parent, step in zip(reversed(spine), reversed(address)):
        result = _with_child(parent, step, result)
    return result


def iter_nodes(t: BinaryTree | WeightedTree) -> Iterator[tuple[Address, BinaryTree | WeightedTree]]:
    """Yield ``(address, subtree)`` pairs in preorder (node, left, right)."""
    stack = [(ROOT, t)]
    while stack:
        address, node = stack.pop()
        yield address, node
        if not isinstance(node, Leaf):
            stack.append((address + "R", node.right))
            stack.append((address + "L", node.left))


def list_addresses(
    t: BinaryTree | WeightedTree, which: AddressFilter = AddressFilter.ALL
) -> list[Address]:
    if which is AddressFilter.ALL:
        return [a for a, _ in iter_nodes(t)]
    want_leaf = which is AddressFilter.LEAVES
    return [a for a, node in iter_nodes(t) if isinstance(node, Leaf) == want_leaf]


def _family(t: Tree) -> type | None:
    return None if isinstance(t, Leaf) else type(t)


def canonical_key(t: Tree) -> tuple:
    """Nested tuple whose natural ordering is the canonical tree order.

    Leaf sorts before every node.  Weighted nodes compare by (left, right,
    weight), binary nodes by (left, right), and Schröder nodes by child count
    and then their children lexicographically.
    """
    if isinstance(t, Leaf):
        return (0,)
    if isinstance(t, WeightedNode):
        return (1, canonical_key(t.left), canonical_key(t.right), t.weight)
    if isinstance(t, BinaryNode):
        return (1, canonical_key(t.left), canonical_key(t.right))
    return (1, len(t.children), tuple(canonical_key(c) for c in t.children))


def _check_same_family(a: Tree, b: Tree) -> None:
    stack = [(a, b)]
    family = None
    while stack:
        x, y = stack.pop()
        for node in (x, y):
            kind = _family(node)
            if kind is None:
                continue
            if family is None:
                family = kind
            elif kind is not family:
                raise KindMismatch(f"cannot compare {family.__name__} with {kind.__name__}")
        if type(x) is type(y) and not isinstance(x, Leaf):
            if isinstance(x, SchroederNode):
                stack.extend(zip(x.children, y.children))
            else:
                stack.append((x.left, y.left))
                stack.append((x.right, y.right))


def canonical_compare(t1: Tree, t2: Tree) -> int:
    """Three-way comparison: -1, 0 or 1."""
    _check_same_family(t1, t2)
    k1, k2 = canonical_key(t1), canonical_key(t2)
    return (k1 > k2) - (k1 < k2)


@dataclass(frozen=True, slots=True)
class PointedTree:
    """A well-weighted tree with exactly one distinguished node.

    Pass ``validate=False`` for intermediate objects that are allowed to break
    the well-weighted rule (raw insertion output), or when the caller already
    guarantees it.
    """

    tree: WeightedTree
    point: Address = ROOT
    validate: InitVar[bool] = True

    def __post_init__(self, validate: bool) -> None:
        node = subtree_at(self.tree, self.point)
        if validate:
            check_well_weighted(self.tree)
        elif not isinstance(node, (Leaf, WeightedNode)):
            raise TypeError("pointed trees are weighted binary trees")

    @property
    def node(self) -> WeightedTree:
        return subtree_at(self.tree, self.point)

    @property
    def is_leaf_pointed(self) -> bool:
        return isinstance(self.node, Leaf)

    @property
    def leaves(self) -> int:
        return leaf_count(self.tree)

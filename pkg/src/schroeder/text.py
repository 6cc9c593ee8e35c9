"""Text form of trees.

Grammar (tokens may be separated by any run of blanks; the printer emits
single spaces)::

    leaf     := "*"
    weight   := "1" | "2"
    wtree    := leaf | "(" weight " " wtree " " wtree ")"
    btree    := leaf | "(" btree " " btree ")"
    stree    := leaf | "{" stree (" " stree)+ "}"
    pointed  := wtree with one "'" right after the pointed node's leading token

A pointed leaf prints as ``*'`` and a pointed internal node as ``(2' ...)``.
"""

from __future__ import annotations

import enum

from .errors import ArityError, PointError, TreeSyntaxError
from .trees import (
    LEAF,
    ROOT,
    BinaryNode,
    Leaf,
    PointedTree,
    SchroederNode,
    WeightedNode,
)

__all__ = ["TreeKind", "parse_tree", "parse_any", "serialize_tree", "guess_kind"]


class TreeKind(enum.Enum):
    SCHROEDER = "schroeder"
    BINARY = "binary"
    WEIGHTED = "weighted"
    POINTED = "pointed"


_MARK = "'"
_BLANKS = " \t"


class _Frame:
    __slots__ = ("bracket", "start", "address", "weight", "children")

    def __init__(self, bracket: str, start: int, address: str, weight: int | None):
        self.bracket = bracket
        self.start = start
        self.address = address
        self.weight = weight
        self.children: list = []


class _Parser:
    def __init__(self, text: str, kind: TreeKind):
        self.text = text
        self.kind = kind
        self.pos = 0
        self.points: list[str] = []

    def _skip_blanks(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos] in _BLANKS:
            self.pos += 1

    def _peek(self) -> str | None:
        return self.text[self.pos] if self.pos < len(self.text) else None

    def _take_mark(self, address: str) -> None:
        if self._peek() == _MARK:
            if self.kind is not TreeKind.POINTED:
                raise TreeSyntaxError("point marker in an unpointed tree", self.pos)
            self.points.append(address)
            self.pos += 1

    def _child_address(self, stack: list[_Frame]) -> str:
        if not stack:
            return ROOT
        frame = stack[-1]
        if frame.bracket == "{":
            return frame.address
        return frame.address + "LR"[min(len(frame.children), 1)]

    def _expect_child_slot(self, stack: list[_Frame]) -> None:
        if stack and stack[-1].bracket == "(" and len(stack[-1].children) == 2:
            raise TreeSyntaxError("too many subtrees", self.pos, "')'")

    def parse(self):
        stack: list[_Frame] = []
        result = None
        wants_weight = self.kind in (TreeKind.WEIGHTED, TreeKind.POINTED)
        while True:
            self._skip_blanks()
            ch = self._peek()
            if result is not None:
                if ch is not None:
                    raise TreeSyntaxError("trailing text", self.pos, "end of input")
                break
            if ch is None:
                raise TreeSyntaxError("unexpected end of input", self.pos, _expected(self.kind, stack))
            value = None
            if ch == "*":
                self._expect_child_slot(stack)
                address = self._child_address(stack)
                self.pos += 1
                self._take_mark(address)
                value = LEAF
            elif ch == "(" and self.kind is not TreeKind.SCHROEDER:
                self._expect_child_slot(stack)
                start = self.pos
                address = self._child_address(stack)
                self.pos += 1
                weight = None
                if wants_weight:
                    self._skip_blanks()
                    w = self._peek()
                    if w not in ("1", "2"):
                        raise TreeSyntaxError("missing weight", self.pos, "'1' or '2'")
                    weight = int(w)
                    self.pos += 1
                    self._take_mark(address)
                stack.append(_Frame("(", start, address, weight))
            elif ch == "{" and self.kind is TreeKind.SCHROEDER:
                stack.append(_Frame("{", self.pos, ROOT, None))
                self.pos += 1
            elif ch == ")" and stack and stack[-1].bracket == "(":
                frame = stack[-1]
                if len(frame.children) < 2:
                    raise TreeSyntaxError("binary node needs two subtrees", self.pos, "a subtree")
                stack.pop()
                self.pos += 1
                left, right = frame.children
                if frame.weight is None:
                    value = BinaryNode(left, right)
                else:
                    value = WeightedNode(frame.weight, left, right)
            elif ch == "}" and stack and stack[-1].bracket == "{":
                frame = stack.pop()
                if len(frame.children) < 2:
                    raise ArityError(
                        f"Schröder node opened at position {frame.start} has "
                        f"{len(frame.children)} child(ren); at least 2 required"
                    )
                self.pos += 1
                value = SchroederNode(tuple(frame.children))
            else:
                raise TreeSyntaxError(f"unexpected {ch!r}", self.pos, _expected(self.kind, stack))
            if value is not None:
                if stack:
                    stack[-1].children.append(value)
                else:
                    result = value
        return result


def _expected(kind: TreeKind, stack: list[_Frame]) -> str:
    opener = "'{'" if kind is TreeKind.SCHROEDER else "'('"
    if not stack:
        return f"'*' or {opener}"
    closer = "'}'" if stack[-1].bracket == "{" else "')'"
    return f"'*', {opener} or {closer}"


def parse_tree(text: str, kind: TreeKind, *, validate: bool = True):
    """Parse ``text`` as a tree of the given family.

    For :attr:`TreeKind.POINTED` a :class:`~schroeder.trees.PointedTree` is
    returned; with ``validate=False`` the underlying tree may violate the
    well-weighted rule.
    """
    parser = _Parser(text.strip(), TreeKind(kind))
    tree = parser.parse()
    if parser.kind is not TreeKind.POINTED:
        return tree
    if len(parser.points) != 1:
        raise PointError(f"expected exactly one point marker, found {len(parser.points)}")
    return PointedTree(tree, parser.points[0], validate)


def guess_kind(text: str) -> TreeKind:
    """Infer the family of a serialized tree from its brackets and markers."""
    stripped = text.strip()
    if stripped.startswith("{"):
        return TreeKind.SCHROEDER
    if _MARK in stripped:
        return TreeKind.POINTED
    body = stripped.lstrip("(" + _BLANKS)
    if stripped.startswith("(") and body[:1] in ("1", "2"):
        return TreeKind.WEIGHTED
    return TreeKind.BINARY


def parse_any(text: str, *, validate: bool = True):
    return parse_tree(text, guess_kind(text), validate=validate)


def serialize_tree(t) -> str:
    """Canonical text form; inverse of :func:`parse_tree`."""
    point = None
    if isinstance(t, PointedTree):
        t, point = t.tree, t.point
    out: list[str] = []
    stack: list = [(ROOT, t)]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            out.append(item)
            continue
        address, node = item
        mark = _MARK if point is not None and address == point else ""
        if isinstance(node, Leaf):
            out.append("*" + mark)
        elif isinstance(node, SchroederNode):
            out.append("{")
            stack.append("}")
            for i in range(len(node.children) - 1, -1, -1):
                stack.append((None, node.children[i]))
                if i:
                    stack.append(" ")
        elif isinstance(node, WeightedNode):
            out.append(f"({node.weight}{mark} ")
            stack.extend([")", (address + "R", node.right), " ", (address + "L", node.left)])
        elif isinstance(node, BinaryNode):
            out.append("(")
            stack.extend([")", (address + "R", node.right), " ", (address + "L", node.left)])
        else:
            raise TypeError(f"not a tree: {node!r}")
    return "".join(out)

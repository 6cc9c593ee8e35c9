"""Bijections behind the three-term Schröder recurrence.

``phi`` flattens a Schröder node ``[r; T1, ..., Tl]`` into a right comb of
weight-2 nodes ending in one weight-1 node, which is exactly the
well-weighted condition read backwards.

``sigma`` inserts a new leaf next to the pointed node of a pointed
well-weighted tree in one of three ways (labels L1, L2, R1).  The raw
insertion (:func:`sigma_prime`) breaks the well-weighted rule only for L2 at
a pointed leaf.  Two of the three shapes of the leaf's father can be repaired
locally; the third (father of weight 2, leaf on the left) is contracted to
the father's right subtree, which then carries the point.  The result is a
bijection

    {L1, L2, R1} x PT(n)  ->  LT(n+1)  +  IT(n-1)

so that 3(2n-1) s(n) = (n+1) s(n+1) + (n-2) s(n-1).

:func:`sigma_inverse` reverses the construction by deleting the pointed leaf
and promoting its sibling, except where that promotion would leave a weight-2
node over a leaf, in which case the insertion must have been a repaired L2.
It is checked exhaustively against ``sigma`` by :func:`check_sigma_bijection`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .enumeration import enumerate_pointed, enumerate_schroeder, enumerate_well_weighted
from .errors import MalformedInput, TooSmall
from .text import serialize_tree
from .trees import (
    LEAF,
    AddressFilter,
    Leaf,
    PointedTree,
    SchroederNode,
    SchroederTree,
    WeightedNode,
    WeightedTree,
    check_well_weighted,
    is_well_weighted,
    leaf_count,
    replace_subtree,
    subtree_at,
)

__all__ = [
    "Label",
    "FatherCase",
    "ImageKind",
    "SigmaImage",
    "SigmaReport",
    "PhiReport",
    "phi",
    "phi_inverse",
    "classify_father_case",
    "sigma_prime",
    "sigma",
    "sigma_inverse",
    "case_c_images",
    "check_sigma_bijection",
    "check_phi_bijection",
]


class Label(enum.Enum):
    """The three insertions. Written 1, 2, 3 elsewhere; same labels."""

    L1 = "L1"
    L2 = "L2"
    R1 = "R1"

    @property
    def index(self) -> int:
        return _LABEL_INDEX[self]


_LABEL_INDEX = {Label.L1: 1, Label.L2: 2, Label.R1: 3}


class FatherCase(enum.Enum):
    CASE_A = "a"
    CASE_B = "b"
    CASE_C = "c"
    NOT_APPLICABLE = "-"


class ImageKind(enum.Enum):
    LEAF_POINTED = "LT"
    INTERIOR_POINTED = "IT"


@dataclass(frozen=True)
class SigmaImage:
    """An element of LT(n+1) or of IT(n-1)."""

    kind: ImageKind
    pointed: PointedTree

    def __post_init__(self) -> None:
        if self.pointed.is_leaf_pointed != (self.kind is ImageKind.LEAF_POINTED):
            raise MalformedInput(f"{self.kind.value} image pointed at the wrong kind of node")

    @property
    def leaves(self) -> int:
        return self.pointed.leaves


# Φ -----------------------------------------------------------------------------


def phi(t: SchroederTree) -> WeightedTree:
    """Map a Schröder tree to the well-weighted tree with the same leaves."""
    if isinstance(t, Leaf):
        return LEAF
    images = [phi(child) for child in t.children]
    result = WeightedNode(1, images[-2], images[-1])
    for image in reversed(images[:-2]):
        result = WeightedNode(2, image, result)
    return result


def _phi_inverse(w: WeightedTree) -> SchroederTree:
    if isinstance(w, Leaf):
        return LEAF
    first = _phi_inverse(w.left)
    rest = _phi_inverse(w.right)
    if w.weight == 1:
        return SchroederNode((first, rest))
    return SchroederNode((first,) + rest.children)


def phi_inverse(w: WeightedTree) -> SchroederTree:
    check_well_weighted(w)
    return _phi_inverse(w)


# σ ------------------------------------------------------------------------------


def _father(p: PointedTree) -> tuple[str, WeightedNode, str]:
    """(father address, father node, side of the pointed node)."""
    if not p.point:
        raise TooSmall("the pointed node is the root and has no father")
    address = p.point[:-1]
    return address, subtree_at(p.tree, address), p.point[-1]


def classify_father_case(p: PointedTree) -> FatherCase:
    if not p.is_leaf_pointed:
        return FatherCase.NOT_APPLICABLE
    _, father, side = _father(p)
    if father.weight == 1:
        return FatherCase.CASE_A if side == "R" else FatherCase.CASE_B
    if side == "L":
        return FatherCase.CASE_C
    raise MalformedInput("pointed leaf is the right son of a weight-2 node")


def sigma_prime(label: Label, p: PointedTree) -> PointedTree:
    """Raw three-way insertion; the result may break the well-weighted rule.

    L1/L2 put a new pointed leaf to the left of the pointed subtree under a
    node of weight 1/2; R1 puts it to the right under a node of weight 1.
    """
    label = Label(label)
    s = p.node
    if label is Label.R1:
        return PointedTree(replace_subtree(p.tree, p.point, WeightedNode(1, s, LEAF)), p.point + "R", False)
    weight = 1 if label is Label.L1 else 2
    return PointedTree(replace_subtree(p.tree, p.point, WeightedNode(weight, LEAF, s)), p.point + "L", False)


def sigma(label: Label, p: PointedTree) -> SigmaImage:
    label = Label(label)
    check_well_weighted(p.tree)
    n = leaf_count(p.tree)
    if n < 2:
        raise TooSmall(f"sigma needs at least 2 leaves, got {n}")
    if label is not Label.L2 or not p.is_leaf_pointed:
        raw = sigma_prime(label, p)
        return SigmaImage(ImageKind.LEAF_POINTED, PointedTree(raw.tree, raw.point))

    case = classify_father_case(p)
    f_addr, father, _ = _father(p)
    if case is FatherCase.CASE_A:
        # (1, t', s) -> (2, t', (1, new, s))
        local = WeightedNode(2, father.left, WeightedNode(1, LEAF, father.right))
        new_point = f_addr + "RL"
    elif case is FatherCase.CASE_B:
        # (1, s, t') -> (2, t', (1, s, new))
        local = WeightedNode(2, father.right, WeightedNode(1, father.left, LEAF))
        new_point = f_addr + "RR"
    else:
        # (2, s, t'') -> t'', losing two leaves
        return SigmaImage(
            ImageKind.INTERIOR_POINTED,
            PointedTree(replace_subtree(p.tree, f_addr, father.right), f_addr),
        )
    return SigmaImage(
        ImageKind.LEAF_POINTED,
        PointedTree(replace_subtree(p.tree, f_addr, local), new_point),
    )


def _is_right_son_of_weight_two(tree: WeightedTree, address: str) -> bool:
    return bool(address) and address[-1] == "R" and subtree_at(tree, address[:-1]).weight == 2


def sigma_inverse(image: SigmaImage) -> tuple[Label, PointedTree]:
    p = image.pointed
    check_well_weighted(p.tree)
    tree = p.tree
    if image.kind is ImageKind.INTERIOR_POINTED:
        node = p.node
        if isinstance(node, Leaf):
            raise MalformedInput("IT image pointed at a leaf")
        restored = replace_subtree(tree, p.point, WeightedNode(2, LEAF, node))
        return Label.L2, PointedTree(restored, p.point + "L")

    if not p.is_leaf_pointed:
        raise MalformedInput("LT image pointed at an interior node")
    if leaf_count(tree) < 3:
        raise TooSmall("leaf-pointed images have at least 3 leaves")
    f_addr, father, side = _father(p)
    if father.weight == 2:
        if side == "R":
            raise MalformedInput("pointed leaf is the right son of a weight-2 node")
        return Label.L2, PointedTree(replace_subtree(tree, f_addr, father.right), f_addr)

    sibling = father.left if side == "R" else father.right
    if isinstance(sibling, Leaf) and _is_right_son_of_weight_two(tree, f_addr):
        # promotion would put a leaf under a weight-2 node: undo a repair
        g_addr = f_addr[:-1]
        t_prime = subtree_at(tree, g_addr).left
        if side == "R":
            restored, point = WeightedNode(1, LEAF, t_prime), g_addr + "L"
        else:
            restored, point = WeightedNode(1, t_prime, LEAF), g_addr + "R"
        return Label.L2, PointedTree(replace_subtree(tree, g_addr, restored), point)

    label = Label.R1 if side == "R" else Label.L1
    return label, PointedTree(replace_subtree(tree, f_addr, sibling), f_addr)


def case_c_images(n: int) -> list[PointedTree]:
    """Raw L2 insertions at case-(c) leaves of PT(n): never well-weighted."""
    return [
        sigma_prime(Label.L2, p)
        for p in enumerate_pointed(n, AddressFilter.LEAVES)
        if classify_father_case(p) is FatherCase.CASE_C
    ]


# exhaustive checks -----------------------------------------------------------------


@dataclass
class SigmaReport:
    n: int
    pairs: int = 0
    lt: int = 0
    it: int = 0
    case_c: int = 0
    injective: bool = True
    well_weighted: bool = True
    onto: bool = True
    left_inverse: bool = True
    right_inverse: bool = True
    counterexample: str | None = field(default=None)

    @property
    def ok(self) -> bool:
        return (
            self.injective
            and self.well_weighted
            and self.onto
            and self.left_inverse
            and self.right_inverse
        )

    def summary(self) -> str:
        return f"n={self.n} pairs={self.pairs} lt={self.lt} it={self.it}"


def _note(report, text: str) -> None:
    if report.counterexample is None:
        report.counterexample = text


def check_sigma_bijection(n: int) -> SigmaReport:
    """Apply sigma to every labelled pointed tree with ``n`` leaves and check
    that it is a bijection onto LT(n+1) + IT(n-1) with ``sigma_inverse`` as
    its two-sided inverse."""
    if n < 2:
        raise TooSmall("sigma is defined for n >= 2")
    report = SigmaReport(n)
    seen: set[SigmaImage] = set()
    for p in enumerate_pointed(n):
        for label in Label:
            report.pairs += 1
            image = sigma(label, p)
            if image.kind is ImageKind.LEAF_POINTED:
                report.lt += 1
            else:
                report.it += 1
                report.case_c += 1
            if not is_well_weighted(image.pointed.tree):
                report.well_weighted = False
                _note(report, f"not well-weighted: {label.value} {serialize_tree(p)}")
            if image in seen:
                report.injective = False
                _note(report, f"collision: {label.value} {serialize_tree(p)}")
            seen.add(image)
            if sigma_inverse(image) != (label, p):
                report.left_inverse = False
                _note(report, f"inverse fails: {label.value} {serialize_tree(p)}")

    targets = [
        SigmaImage(ImageKind.LEAF_POINTED, q) for q in enumerate_pointed(n + 1, AddressFilter.LEAVES)
    ]
    if n >= 3:
        targets += [
            SigmaImage(ImageKind.INTERIOR_POINTED, q)
            for q in enumerate_pointed(n - 1, AddressFilter.INTERIOR)
        ]
    if len(targets) != len(seen) or not seen.issuperset(targets):
        report.onto = False
        missing = next((t for t in targets if t not in seen), None)
        _note(report, f"not onto: {len(seen)} images for {len(targets)} targets"
              + (f", missing {missing.kind.value}: {serialize_tree(missing.pointed)}" if missing else ""))
    for target in targets:
        label, p = sigma_inverse(target)
        if sigma(label, p) != target:
            report.right_inverse = False
            _note(report, f"sigma(sigma_inverse) fails: {target.kind.value}: {serialize_tree(target.pointed)}")
            break
    return report


@dataclass
class PhiReport:
    n: int
    trees: int = 0
    round_trip: bool = True
    inverse_round_trip: bool = True
    image_matches: bool = True
    counterexample: str | None = None

    @property
    def ok(self) -> bool:
        return self.round_trip and self.inverse_round_trip and self.image_matches

    def summary(self) -> str:
        return f"n={self.n} trees={self.trees}"


def check_phi_bijection(n: int) -> PhiReport:
    report = PhiReport(n)
    images = set()
    for t in enumerate_schroeder(n):
        report.trees += 1
        w = phi(t)
        images.add(w)
        if leaf_count(w) != n or not is_well_weighted(w) or phi_inverse(w) != t:
            report.round_trip = False
            _note(report, serialize_tree(t))
    weighted = list(enumerate_well_weighted(n))
    for w in weighted:
        if phi(phi_inverse(w)) != w:
            report.inverse_round_trip = False
            _note(report, serialize_tree(w))
    if len(images) != report.trees or images != set(weighted):
        report.image_matches = False
        _note(report, f"image of size {len(images)} vs {len(weighted)} well-weighted trees")
    return report


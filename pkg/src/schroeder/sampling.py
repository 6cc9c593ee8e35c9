"""Seeded uniform random generation of binary, well-weighted and Schröder trees.

Binary trees grow by Rémy insertion: from a tree with ``m`` leaves pick one of
its ``2m - 1`` nodes and a side, and graft a new leaf there.  Each of the
``2(2m-1)`` choices gives a distinct leaf-marked tree, so a uniform tree with
``m`` leaves becomes a uniform tree with ``m + 1`` leaves.

Well-weighted trees use the same idea with :func:`~schroeder.bijections.sigma`.
A uniform pointed tree with a uniform label maps to a uniform element of
LT(m+1) + IT(m-1).  Every tree with ``k`` leaves carries ``k`` leaf points and
``k - 1`` interior points, so dropping the point keeps the tree uniform given
its size.  The walk therefore moves by one leaf up or down per step and stops
the first time it reaches the target size.  This use of the bijection as a
sampler is an extension; it is validated by the chi-square tests here rather
than by a proof.

All samplers use :class:`random.Random` (Mersenne Twister, 19937-bit state).
The same seed always gives the same tree.
"""

from __future__ import annotations

import enum
import random
from collections import Counter
from dataclasses import dataclass

from scipy import stats

from .bijections import Label, phi_inverse, sigma
from .enumeration import enumerate_binary, enumerate_schroeder, enumerate_well_weighted
from .errors import StepBudgetExhausted, TooSmall, UnknownClass
from .text import serialize_tree
from .trees import (
    LEAF,
    BinaryNode,
    BinaryTree,
    Leaf,
    PointedTree,
    SchroederTree,
    WeightedNode,
    WeightedTree,
    leaf_count,
    list_addresses,
    replace_subtree,
    subtree_at,
)

__all__ = [
    "PRNG_NAME",
    "SIGNIFICANCE",
    "SampleKind",
    "SamplerConfig",
    "UniformityReport",
    "remy_step",
    "sample_binary_uniform",
    "sigma_walk_step",
    "sample_well_weighted_uniform",
    "sample_schroeder_uniform",
    "sample",
    "chi_square_threshold",
    "chi_square_uniformity",
]

PRNG_NAME = "mt19937 (random.Random)"
SIGNIFICANCE = 0.001
_LABELS = tuple(Label)


class SampleKind(enum.Enum):
    BINARY = "binary"
    WELL_WEIGHTED = "wellweighted"
    SCHROEDER = "schroeder"


@dataclass(frozen=True)
class SamplerConfig:
    target_n: int
    seed: int = 0
    max_steps: int | None = None

    def __post_init__(self) -> None:
        if not isinstance(self.target_n, int) or self.target_n < 1:
            raise ValueError(f"target_n must be a positive integer, got {self.target_n!r}")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        if self.max_steps is None:
            object.__setattr__(self, "max_steps", 64 * self.target_n)
        elif self.max_steps <= 0:
            raise ValueError("max_steps must be positive")

    def rng(self) -> random.Random:
        return random.Random(self.seed)


@dataclass(frozen=True)
class UniformityReport:
    kind: SampleKind
    n: int
    classes: int
    draws: int
    chi_square: float
    threshold: float
    prng: str = PRNG_NAME

    @property
    def passed(self) -> bool:
        return self.chi_square <= self.threshold

    def summary(self) -> str:
        verdict = "pass" if self.passed else "FAIL"
        return (
            f"{self.kind.value} n={self.n} classes={self.classes} draws={self.draws} "
            f"chi2={self.chi_square:.3f} threshold={self.threshold:.3f} prng={self.prng} {verdict}"
        )


# Rémy growth -----------------------------------------------------------------------


def remy_step(t: BinaryTree, address: str, side: str) -> BinaryTree:
    """Graft a new leaf on ``side`` ("L" or "R") of the node at ``address``."""
    s = subtree_at(t, address)
    if side == "L":
        grown = BinaryNode(LEAF, s)
    elif side == "R":
        grown = BinaryNode(s, LEAF)
    else:
        raise ValueError(f"side must be 'L' or 'R', got {side!r}")
    return replace_subtree(t, address, grown)


def _grow_binary(target_n: int, rng: random.Random) -> BinaryTree:
    tree: BinaryTree = LEAF
    for _ in range(1, target_n):
        addresses = list_addresses(tree)
        choice = rng.randrange(2 * len(addresses))
        tree = remy_step(tree, addresses[choice >> 1], "LR"[choice & 1])
    return tree


def sample_binary_uniform(cfg: SamplerConfig, rng: random.Random | None = None) -> BinaryTree:
    return _grow_binary(cfg.target_n, rng or cfg.rng())


# σ walk ----------------------------------------------------------------------------


def sigma_walk_step(t: WeightedTree, address: str, label: Label) -> WeightedTree:
    """One walk move: apply sigma at ``address`` and forget the point."""
    if isinstance(t, Leaf):
        raise TooSmall("the walk step needs at least 2 leaves")
    return sigma(label, PointedTree(t, address)).pointed.tree


def _walk(cfg: SamplerConfig, rng: random.Random) -> WeightedTree:
    if cfg.target_n == 1:
        return LEAF
    tree: WeightedTree = WeightedNode(1, LEAF, LEAF)
    size = 2
    steps = 0
    while size != cfg.target_n:
        if steps >= cfg.max_steps:
            raise StepBudgetExhausted(
                f"walk stopped at {size} leaves after {steps} steps (target {cfg.target_n})"
            )
        steps += 1
        addresses = list_addresses(tree)
        address = addresses[rng.randrange(len(addresses))]
        label = _LABELS[rng.randrange(3)]
        tree = sigma_walk_step(tree, address, label)
        size = leaf_count(tree)
    return tree


def sample_well_weighted_uniform(
    cfg: SamplerConfig, rng: random.Random | None = None
) -> WeightedTree:
    return _walk(cfg, rng or cfg.rng())


def sample_schroeder_uniform(cfg: SamplerConfig, rng: random.Random | None = None) -> SchroederTree:
    return phi_inverse(_walk(cfg, rng or cfg.rng()))


_SAMPLERS = {
    SampleKind.BINARY: sample_binary_uniform,
    SampleKind.WELL_WEIGHTED: sample_well_weighted_uniform,
    SampleKind.SCHROEDER: sample_schroeder_uniform,
}

_ENUMERATORS = {
    SampleKind.BINARY: enumerate_binary,
    SampleKind.WELL_WEIGHTED: enumerate_well_weighted,
    SampleKind.SCHROEDER: enumerate_schroeder,
}


def sample(kind: SampleKind, cfg: SamplerConfig, count: int = 1) -> list:
    """``count`` independent draws sharing one generator seeded from ``cfg``."""
    draw = _SAMPLERS[SampleKind(kind)]
    rng = cfg.rng()
    return [draw(cfg, rng) for _ in range(count)]


# uniformity harness -------------------------------------------------------------------


def chi_square_threshold(classes: int, significance: float = SIGNIFICANCE) -> float:
    """Upper ``significance`` quantile of chi-square with ``classes - 1`` dof."""
    if classes < 2:
        return 0.0
    return float(stats.chi2.isf(significance, classes - 1))


def chi_square_uniformity(kind: SampleKind, n: int, draws: int, seed: int) -> UniformityReport:
    """Tally ``draws`` samples against the enumerated classes and run Pearson's test."""
    kind = SampleKind(kind)
    index = {serialize_tree(t): i for i, t in enumerate(_ENUMERATORS[kind](n))}
    observed = [0] * len(index)
    tally = Counter(serialize_tree(t) for t in sample(kind, SamplerConfig(n, seed), draws))
    for text, hits in tally.items():
        if text not in index:
            raise UnknownClass(f"sampled {text!r}, which is not a {kind.value} tree with {n} leaves")
        observed[index[text]] = hits
    chi2 = float(stats.chisquare(observed).statistic) if len(index) > 1 else 0.0
    return UniformityReport(kind, n, len(index), draws, chi2, chi_square_threshold(len(index)))

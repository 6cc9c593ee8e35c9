"""Exhaustive, duplicate-free generation of trees with a given number of leaves.

Streams are emitted in strictly increasing :func:`~schroeder.trees.canonical_key`
order.  Because that order is lexicographic over a prefix-free encoding, the
trees with ``n`` leaves come out in order when the root's components are
iterated in order: first subtree over *all* smaller trees (merged across
sizes), then the remaining subtrees over the trees that complete the leaf
count, then the weight.

Every stream is a chain of generators; only the streams of small subtrees
are cached.  Schröder trees are built directly from
child sequences, never as images of the binary encoding, so the bijection
tests compare two independent constructions.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Iterable, Iterator

from .trees import (
    LEAF,
    AddressFilter,
    BinaryNode,
    Leaf,
    PointedTree,
    SchroederNode,
    WeightedNode,
    list_addresses,
)

__all__ = [
    "TreeStream",
    "enumerate_well_weighted",
    "enumerate_binary",
    "enumerate_schroeder",
    "enumerate_pointed",
    "clear_caches",
]


class TreeStream:
    """Single-consumer iterator over one family of trees with ``n`` leaves."""

    def __init__(self, kind: str, n: int, source: Iterator):
        self.kind = kind
        self.n = n
        self._source = source

    def __iter__(self) -> TreeStream:
        return self

    def __next__(self):
        return next(self._source)

    def __repr__(self) -> str:
        return f"TreeStream(kind={self.kind!r}, n={self.n})"


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")


# Subtree streams for at most this many leaves are kept as tuples; larger
# ones are regenerated lazily, so a stream's first tree costs little memory.
_CACHE_LEAVES = 9


_MEMOS: list = []


def _cached(gen: Callable[[int], Iterator]) -> Callable[[int], Iterable]:
    memo = lru_cache(maxsize=None)(lambda k: tuple(gen(k)))
    _MEMOS.append(memo)

    def source(k: int) -> Iterable:
        return memo(k) if k <= _CACHE_LEAVES else gen(k)

    return source


def clear_caches() -> None:
    """Drop the memoized small-subtree streams (they are rebuilt on demand)."""
    for memo in _MEMOS:
        memo.cache_clear()


# weighted binary trees -------------------------------------------------------


def _gen_well_weighted(n: int) -> Iterator[WeightedNode | Leaf]:
    if n == 1:
        yield LEAF
        return
    for k, left in _ww_upto(n - 1):
        for right in _ww_exact(n - k):
            yield WeightedNode(1, left, right)
            if not isinstance(right, Leaf):
                yield WeightedNode(2, left, right)


def _gen_ww_upto(k: int) -> Iterator[tuple[int, WeightedNode | Leaf]]:
    """(leaves, tree) for every well-weighted tree with at most k leaves."""
    if k < 1:
        return
    yield 1, LEAF
    for k1, left in _ww_upto(k - 1):
        for k2, right in _ww_upto(k - k1):
            yield k1 + k2, WeightedNode(1, left, right)
            if not isinstance(right, Leaf):
                yield k1 + k2, WeightedNode(2, left, right)


_ww_exact = _cached(_gen_well_weighted)
_ww_upto = _cached(_gen_ww_upto)


def enumerate_well_weighted(n: int) -> TreeStream:
    """Every well-weighted tree with ``n`` leaves, once each."""
    _check_n(n)
    return TreeStream("wellweighted", n, _gen_well_weighted(n))


# binary trees ------------------------------------------------------------------


def _gen_binary(n: int) -> Iterator[BinaryNode | Leaf]:
    if n == 1:
        yield LEAF
        return
    for k, left in _bin_upto(n - 1):
        for right in _bin_exact(n - k):
            yield BinaryNode(left, right)


def _gen_bin_upto(k: int) -> Iterator[tuple[int, BinaryNode | Leaf]]:
    if k < 1:
        return
    yield 1, LEAF
    for k1, left in _bin_upto(k - 1):
        for k2, right in _bin_upto(k - k1):
            yield k1 + k2, BinaryNode(left, right)


_bin_exact = _cached(_gen_binary)
_bin_upto = _cached(_gen_bin_upto)


def enumerate_binary(n: int) -> TreeStream:
    _check_n(n)
    return TreeStream("binary", n, _gen_binary(n))


# Schröder trees ----------------------------------------------------------------


def _child_sequences(arity: int, n: int) -> Iterator[tuple]:
    """Tuples of ``arity`` Schröder trees with ``n`` leaves in total, lexicographic."""
    if arity == 1:
        for t in _sch_exact(n):
            yield (t,)
        return
    for k, first in _sch_upto(n - arity + 1):
        for rest in _child_sequences(arity - 1, n - k):
            yield (first,) + rest


def _child_sequences_upto(arity: int, n: int) -> Iterator[tuple[int, tuple]]:
    """Like :func:`_child_sequences` but with at most ``n`` leaves in total."""
    if arity == 1:
        for k, t in _sch_upto(n):
            yield k, (t,)
        return
    for k, first in _sch_upto(n - arity + 1):
        for rest_leaves, rest in _child_sequences_upto(arity - 1, n - k):
            yield k + rest_leaves, (first,) + rest


def _gen_schroeder(n: int) -> Iterator[SchroederNode | Leaf]:
    if n == 1:
        yield LEAF
        return
    for arity in range(2, n + 1):
        for children in _child_sequences(arity, n):
            yield SchroederNode(children)


def _gen_sch_upto(k: int) -> Iterator[tuple[int, SchroederNode | Leaf]]:
    if k < 1:
        return
    yield 1, LEAF
    for arity in range(2, k + 1):
        for leaves, children in _child_sequences_upto(arity, k):
            yield leaves, SchroederNode(children)


_sch_exact = _cached(_gen_schroeder)
_sch_upto = _cached(_gen_sch_upto)


def enumerate_schroeder(n: int) -> TreeStream:
    """Every Schröder tree with ``n`` leaves, generated from root arities and
    compositions of the leaf count."""
    _check_n(n)
    return TreeStream("schroeder", n, _gen_schroeder(n))


# pointed trees -----------------------------------------------------------------


def _gen_pointed(n: int, mode: AddressFilter) -> Iterator[PointedTree]:
    for tree in _gen_well_weighted(n):
        for address in list_addresses(tree, mode):
            # the generator only builds well-weighted trees
            yield PointedTree(tree, address, False)


def enumerate_pointed(n: int, mode: AddressFilter = AddressFilter.ALL) -> TreeStream:
    """Pointed well-weighted trees: tree-major, then preorder address.

    ``mode`` selects the pointed set: ``ALL`` gives (2n-1) s(n) elements,
    ``LEAVES`` gives n s(n) and ``INTERIOR`` gives (n-1) s(n).
    """
    _check_n(n)
    mode = AddressFilter(mode)
    return TreeStream(f"pointed-{mode.value}", n, _gen_pointed(n, mode))

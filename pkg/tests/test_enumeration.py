import pytest

from schroeder.counting import catalan_closed_form, pointed_counts, schroeder_numbers_dp
from schroeder.enumeration import (
    enumerate_binary,
    enumerate_pointed,
    enumerate_schroeder,
    enumerate_well_weighted,
)
from schroeder.text import serialize_tree
from schroeder.trees import AddressFilter, LEAF, canonical_key, is_well_weighted, leaf_count

from conftest import B, S, W


def test_small_streams():
    assert list(enumerate_well_weighted(1)) == [LEAF]
    assert list(enumerate_well_weighted(2)) == [W("(1 * *)")]
    assert list(enumerate_binary(2)) == [B("(* *)")]
    assert list(enumerate_schroeder(1)) == [LEAF]
    assert set(enumerate_schroeder(3)) == {S("{* * *}"), S("{{* *} *}"), S("{* {* *}}")}


def test_four_leaf_family_sizes():
    assert sum(1 for _ in enumerate_well_weighted(4)) == 11
    assert sum(1 for _ in enumerate_binary(4)) == 5


def test_well_weighted_four_leaves_explicit():
    expected = {
        "(1 * (1 * (1 * *)))", "(2 * (1 * (1 * *)))", "(1 * (2 * (1 * *)))",
        "(2 * (2 * (1 * *)))", "(1 * (1 (1 * *) *))", "(2 * (1 (1 * *) *))",
        "(1 (1 * *) (1 * *))", "(1 (1 * (1 * *)) *)", "(1 (2 * (1 * *)) *)",
        "(1 (1 (1 * *) *) *)", "(2 (1 * *) (1 * *))",
    }
    assert {serialize_tree(t) for t in enumerate_well_weighted(4)} == expected


@pytest.mark.parametrize("n", range(1, 10))
def test_counts_match_sequences(n):
    s = schroeder_numbers_dp(n)[n]
    assert sum(1 for _ in enumerate_schroeder(n)) == s
    assert sum(1 for _ in enumerate_well_weighted(n)) == s
    assert sum(1 for _ in enumerate_binary(n)) == catalan_closed_form(n)


def test_binary_ten():
    assert sum(1 for _ in enumerate_binary(10)) == 4862


@pytest.mark.parametrize("n", range(1, 9))
def test_streams_are_strictly_canonical_and_distinct(n):
    for stream in (enumerate_schroeder(n), enumerate_well_weighted(n), enumerate_binary(n)):
        trees = list(stream)
        keys = [canonical_key(t) for t in trees]
        assert all(a < b for a, b in zip(keys, keys[1:]))
        texts = [serialize_tree(t) for t in trees]
        assert len(set(texts)) == len(texts)
        assert all(leaf_count(t) == n for t in trees)


@pytest.mark.parametrize("n", range(1, 9))
def test_emitted_trees_are_well_weighted(n):
    assert all(is_well_weighted(t) for t in enumerate_well_weighted(n))


@pytest.mark.parametrize("n", range(1, 8))
def test_pointed_stream_sizes(n):
    pt, lt, it = pointed_counts(n)
    assert sum(1 for _ in enumerate_pointed(n)) == pt
    assert sum(1 for _ in enumerate_pointed(n, AddressFilter.LEAVES)) == lt
    assert sum(1 for _ in enumerate_pointed(n, AddressFilter.INTERIOR)) == it


def test_pointed_examples():
    two = list(enumerate_pointed(2))
    assert [p.point for p in two] == ["", "L", "R"]
    assert all(p.tree == W("(1 * *)") for p in two)
    assert list(enumerate_pointed(1, AddressFilter.INTERIOR)) == []
    assert sum(1 for _ in enumerate_pointed(4)) == 77


def test_pointed_order_is_tree_major():
    trees = [p.tree for p in enumerate_pointed(4)]
    firsts = [t for i, t in enumerate(trees) if i == 0 or trees[i - 1] != t]
    assert firsts == list(enumerate_well_weighted(4))


def test_streams_are_lazy_and_single_use():
    stream = enumerate_schroeder(12)
    first = next(stream)
    assert leaf_count(first) == 12
    assert stream.n == 12 and stream.kind == "schroeder"
    assert iter(stream) is stream


def test_rejects_bad_n():
    with pytest.raises(ValueError):
        enumerate_binary(0)

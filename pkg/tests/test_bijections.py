import pytest
from hypothesis import given

from schroeder.bijections import (
    FatherCase,
    ImageKind,
    Label,
    SigmaImage,
    case_c_images,
    check_phi_bijection,
    check_sigma_bijection,
    classify_father_case,
    phi,
    phi_inverse,
    sigma,
    sigma_inverse,
    sigma_prime,
)
from schroeder.counting import schroeder_numbers_dp
from schroeder.enumeration import enumerate_pointed, enumerate_schroeder, enumerate_well_weighted
from schroeder.errors import MalformedInput, NotWellWeighted, TooSmall
from schroeder.text import serialize_tree
from schroeder.trees import LEAF, AddressFilter, PointedTree, is_well_weighted, leaf_count, list_addresses

from conftest import P, S, W, schroeder_trees, well_weighted_trees


@pytest.mark.parametrize(
    "schroeder, weighted",
    [
        ("*", "*"),
        ("{* * *}", "(2 * (1 * *))"),
        ("{{* *} *}", "(1 (1 * *) *)"),
        ("{* * * *}", "(2 * (2 * (1 * *)))"),
        ("{* {* *}}", "(1 * (1 * *))"),
    ],
)
def test_phi_examples(schroeder, weighted):
    assert phi(S(schroeder)) == W(weighted)
    assert phi_inverse(W(weighted)) == S(schroeder)


def test_phi_inverse_rejects_bad_weights():
    with pytest.raises(NotWellWeighted):
        phi_inverse(W("(2 * *)"))


@given(schroeder_trees)
def test_phi_round_trip_random(t):
    w = phi(t)
    assert is_well_weighted(w)
    assert leaf_count(w) == leaf_count(t)
    assert phi_inverse(w) == t


@given(well_weighted_trees)
def test_phi_inverse_round_trip_random(w):
    assert phi(phi_inverse(w)) == w


@pytest.mark.parametrize("n", range(1, 8))
def test_phi_image_is_the_well_weighted_set(n):
    images = [phi(t) for t in enumerate_schroeder(n)]
    assert len(set(images)) == len(images)
    assert set(images) == set(enumerate_well_weighted(n))


@pytest.mark.parametrize("n", [1, 4, 7])
def test_phi_report(n):
    report = check_phi_bijection(n)
    assert report.ok
    assert report.summary() == f"n={n} trees={schroeder_numbers_dp(n)[n]}"


@pytest.mark.parametrize(
    "text, case",
    [
        ("(1 (1 * *) *')", FatherCase.CASE_A),
        ("(1 *' *)", FatherCase.CASE_B),
        ("(2 *' (1 * *))", FatherCase.CASE_C),
        ("(1' * *)", FatherCase.NOT_APPLICABLE),
    ],
)
def test_father_cases(text, case):
    assert classify_father_case(P(text)) is case


def test_father_case_integrity_error():
    raw = PointedTree(W("(2 * *)"), "R", False)
    with pytest.raises(MalformedInput):
        classify_father_case(raw)


def test_father_case_needs_a_father():
    with pytest.raises(TooSmall):
        classify_father_case(P("*'"))


@pytest.mark.parametrize(
    "label, before, after",
    [
        (Label.L1, "(1 *' *)", "(1 (1 *' *) *)"),
        (Label.R1, "(1 *' *)", "(1 (1 * *') *)"),
        (Label.L2, "(1 *' *)", "(1 (2 *' *) *)"),
    ],
)
def test_sigma_prime_examples(label, before, after):
    raw = sigma_prime(label, P(before))
    assert serialize_tree(raw) == after


def test_sigma_prime_l2_at_a_leaf_breaks_the_weights():
    assert not is_well_weighted(sigma_prime(Label.L2, P("(1 *' *)")).tree)


@pytest.mark.parametrize(
    "label, before, kind, after",
    [
        (Label.L2, "(1 *' *)", ImageKind.LEAF_POINTED, "(2 * (1 * *'))"),
        (Label.L2, "(1 (1 * *) *')", ImageKind.LEAF_POINTED, "(2 (1 * *) (1 *' *))"),
        (Label.L2, "(2 *' (1 * *))", ImageKind.INTERIOR_POINTED, "(1' * *)"),
        (Label.L2, "(1' * *)", ImageKind.LEAF_POINTED, "(2 *' (1 * *))"),
        (Label.L1, "(1 *' *)", ImageKind.LEAF_POINTED, "(1 (1 *' *) *)"),
    ],
)
def test_sigma_examples(label, before, kind, after):
    image = sigma(label, P(before))
    assert image.kind is kind
    assert serialize_tree(image.pointed) == after
    assert sigma_inverse(image) == (label, P(before))


@pytest.mark.parametrize(
    "kind, text, label, before",
    [
        (ImageKind.LEAF_POINTED, "(1 (1 *' *) *)", Label.L1, "(1 *' *)"),
        (ImageKind.LEAF_POINTED, "(2 * (1 * *'))", Label.L2, "(1 *' *)"),
        (ImageKind.INTERIOR_POINTED, "(1' * *)", Label.L2, "(2 *' (1 * *))"),
    ],
)
def test_sigma_inverse_examples(kind, text, label, before):
    assert sigma_inverse(SigmaImage(kind, P(text))) == (label, P(before))


def test_sigma_too_small():
    with pytest.raises(TooSmall):
        sigma(Label.L1, P("*'"))
    with pytest.raises(TooSmall):
        sigma_inverse(SigmaImage(ImageKind.LEAF_POINTED, P("(1 *' *)")))


def test_image_kind_must_match_point():
    with pytest.raises(ValueError):
        SigmaImage(ImageKind.INTERIOR_POINTED, P("(1 *' *)"))
    with pytest.raises(ValueError):
        SigmaImage(ImageKind.LEAF_POINTED, P("(1' * *)"))


def test_sigma_rejects_bad_weights():
    with pytest.raises(NotWellWeighted):
        sigma(Label.L1, PointedTree(W("(2 * *)"), "L", False))


def test_labels_map_to_indices():
    assert [lab.index for lab in Label] == [1, 2, 3]
    assert Label("L2") is Label.L2


@pytest.mark.parametrize("n", range(2, 9))
def test_case_c_images(n):
    s = schroeder_numbers_dp(n)
    images = case_c_images(n)
    assert len(images) == (n - 2) * s[n - 1]
    assert len(set(images)) == len(images)
    assert not any(is_well_weighted(p.tree) for p in images)


@pytest.mark.parametrize("n", range(2, 8))
def test_sigma_report_exhaustive(n):
    s = schroeder_numbers_dp(n + 1)
    report = check_sigma_bijection(n)
    assert report.ok, report.counterexample
    assert report.pairs == 3 * (2 * n - 1) * s[n]
    assert report.lt == (n + 1) * s[n + 1]
    assert report.it == (n - 2) * s[n - 1]


def test_sigma_report_summaries():
    assert check_sigma_bijection(2).summary() == "n=2 pairs=9 lt=9 it=0"
    assert check_sigma_bijection(3).summary() == "n=3 pairs=45 lt=44 it=1"


def test_the_single_contraction_at_three_leaves():
    contractions = [
        (label, p)
        for p in enumerate_pointed(3)
        for label in Label
        if sigma(label, p).kind is ImageKind.INTERIOR_POINTED
    ]
    assert contractions == [(Label.L2, P("(2 *' (1 * *))"))]


@pytest.mark.parametrize("n", range(2, 7))
def test_leaf_pointed_l2_inputs_count(n):
    # every leaf-pointed input lands in exactly one of the three father cases
    cases = [classify_father_case(p) for p in enumerate_pointed(n, AddressFilter.LEAVES)]
    assert len(cases) == n * schroeder_numbers_dp(n)[n]
    assert FatherCase.NOT_APPLICABLE not in cases


@given(well_weighted_trees)
def test_sigma_round_trip_random(t):
    if t is LEAF:
        return
    for address in list_addresses(t):
        p = PointedTree(t, address)
        for label in Label:
            image = sigma(label, p)
            assert is_well_weighted(image.pointed.tree)
            assert sigma_inverse(image) == (label, p)

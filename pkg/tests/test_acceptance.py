"""Acceptance criteria, each at its stated tolerance and time limit.

Every test appends one ``criterion K: PASS|FAIL ...`` line that pytest prints
in an "acceptance criteria" section at the end of the run.  Expected values
are literal tables checked against independent oracles elsewhere in the suite.
"""

from __future__ import annotations

import time
from contextlib import contextmanager
from math import comb

import pytest

import conftest
from schroeder import counting, enumeration
from schroeder.bijections import ImageKind, Label, check_phi_bijection, check_sigma_bijection, sigma
from schroeder.counting import Recurrence, schroeder_numbers_dp, schroeder_numbers_rec, verify_recurrence
from schroeder.enumeration import enumerate_binary, enumerate_pointed, enumerate_schroeder, enumerate_well_weighted
from schroeder.sampling import SampleKind, chi_square_uniformity, remy_step
from schroeder.text import serialize_tree
from schroeder.trees import list_addresses

from conftest import P

SCHROEDER_1_TO_10 = (1, 1, 3, 11, 45, 197, 903, 4279, 20793, 103049)
SEED = 2024


class _Outcome:
    def __init__(self):
        self.detail = ""


@contextmanager
def criterion(label: str, limit: float | None = None):
    """Time the block, enforce ``limit`` seconds and record one verdict line."""
    outcome = _Outcome()
    start = time.perf_counter()
    try:
        yield outcome
    except BaseException as exc:
        elapsed = time.perf_counter() - start
        _record(f"criterion {label}: FAIL ({elapsed:.1f}s) {type(exc).__name__}: {exc}".splitlines()[0])
        raise
    elapsed = time.perf_counter() - start
    budget = f" limit {limit:.0f}s" if limit is not None else ""
    if limit is not None and elapsed > limit:
        _record(f"criterion {label}: FAIL took {elapsed:.1f}s{budget} {outcome.detail}")
        pytest.fail(f"criterion {label} took {elapsed:.1f}s, limit {limit}s")
    _record(f"criterion {label}: PASS ({elapsed:.1f}s{budget}) {outcome.detail}")


def _record(line: str) -> None:
    conftest.ACCEPTANCE_LINES.append(line.rstrip())
    print(line)


@pytest.fixture
def cold(monkeypatch):
    """Start from empty caches so timings are not flattered by earlier tests."""
    enumeration.clear_caches()
    monkeypatch.setattr(counting, "_dp_prefix", [0, 1])


def test_criterion_1_counts_by_enumeration(cold):
    with criterion("1", limit=30) as c:
        schroeder = tuple(sum(1 for _ in enumerate_schroeder(n)) for n in range(1, 11))
        weighted = tuple(sum(1 for _ in enumerate_well_weighted(n)) for n in range(1, 11))
        assert schroeder == SCHROEDER_1_TO_10
        assert weighted == SCHROEDER_1_TO_10
        c.detail = f"schroeder and well-weighted counts n=1..10 = {', '.join(map(str, SCHROEDER_1_TO_10))}"


def test_criterion_2_catalan(cold):
    with criterion("2", limit=10) as c:
        counts = [sum(1 for _ in enumerate_binary(n)) for n in range(1, 13)]
        assert counts == [comb(2 * n - 2, n - 1) // n for n in range(1, 13)]
        assert all(comb(2 * n - 2, n - 1) % n == 0 for n in range(1, 13))
        assert counts[3] == 5
        c.detail = f"binary counts n=1..12 match c(n); c(4)={counts[3]} c(12)={counts[11]}"


def test_criterion_3_schroeder_recurrence(cold):
    with criterion("3", limit=10) as c:
        report = verify_recurrence(Recurrence.SCHROEDER, 2000)
        assert report.all_hold, f"first failure at n={report.first_failure}"
        s = (0,) + schroeder_numbers_dp(2001).values
        assert all(
            3 * (2 * n - 1) * s[n] == (n + 1) * s[n + 1] + (n - 2) * s[n - 1] for n in range(2, 2001)
        )
        assert schroeder_numbers_rec(2000).values == schroeder_numbers_dp(2000).values
        c.detail = f"2 <= n <= 2000 exact; s(2000) has {len(str(s[2000]))} digits"


def test_criterion_4_catalan_recurrence(cold):
    with criterion("4", limit=5) as c:
        report = verify_recurrence(Recurrence.CATALAN, 2000)
        assert report.all_hold, f"first failure at n={report.first_failure}"
        c.detail = "1 <= n <= 2000 exact against the closed form"


def test_criterion_5_phi(cold):
    with criterion("5", limit=30) as c:
        reports = [check_phi_bijection(n) for n in range(1, 9)]
        bad = [r for r in reports if not r.ok]
        assert not bad, bad[0].counterexample
        assert reports[-1].trees == 4279
        c.detail = "both round trips and image equality for n <= 8; " + reports[-1].summary()


_SIGMA_REPORTS: dict[int, object] = {}


def test_criterion_6_sigma(cold):
    with criterion("6", limit=60) as c:
        for n in range(2, 9):
            report = check_sigma_bijection(n)
            _SIGMA_REPORTS[n] = report
            assert report.ok, f"n={n}: {report.counterexample}"
        assert _SIGMA_REPORTS[3].summary() == "n=3 pairs=45 lt=44 it=1"
        contractions = [
            (label, p)
            for p in enumerate_pointed(3)
            for label in Label
            if sigma(label, p).kind is ImageKind.INTERIOR_POINTED
        ]
        assert contractions == [(Label.L2, P("(2 *' (1 * *))"))]
        assert _SIGMA_REPORTS[8].pairs == 192555
        c.detail = f"n=2..8 bijective with inverse; {_SIGMA_REPORTS[8].summary()}"


def test_criterion_7_cardinality_identity():
    with criterion("7") as c:
        s = (0,) + SCHROEDER_1_TO_10
        for n in range(2, 9):
            report = _SIGMA_REPORTS.get(n) or check_sigma_bijection(n)
            assert report.ok
            assert report.pairs == 3 * (2 * n - 1) * s[n]
            assert report.lt == (n + 1) * s[n + 1]
            assert report.it == (n - 2) * s[n - 1]
        c.detail = "image sizes equal (n+1)s(n+1) and (n-2)s(n-1) for n=2..8"


@pytest.mark.parametrize(
    "kind, n, draws, threshold",
    [
        (SampleKind.WELL_WEIGHTED, 4, 110_000, 29.588),
        (SampleKind.BINARY, 5, 140_000, 34.528),
        (SampleKind.SCHROEDER, 3, 90_000, 13.816),
    ],
    ids=["wellweighted", "binary", "schroeder"],
)
def test_criterion_8_sampler_uniformity(kind, n, draws, threshold):
    with criterion(f"8 [{kind.value} n={n}]", limit=60) as c:
        report = chi_square_uniformity(kind, n, draws, seed=SEED)
        assert report.threshold == pytest.approx(threshold, abs=5e-4)
        c.detail = f"seed={SEED} " + report.summary()
        assert report.passed, report.summary()


def test_criterion_9_remy_exhaustive():
    with criterion("9") as c:
        bare_collisions = 0
        for m in range(1, 7):
            grown_pairs = set()
            for t in enumerate_binary(m):
                results = []
                for address in list_addresses(t):
                    for side in "LR":
                        # the new leaf sits at address+side; that is what tells moves apart
                        results.append((remy_step(t, address, side), address + side))
                assert len(results) == 2 * (2 * m - 1)
                assert len(set(results)) == len(results)
                bare_collisions += len(results) - len({tree for tree, _ in results})
                grown_pairs.update(results)
            c_next = comb(2 * m, m) // (m + 1)
            assert len(grown_pairs) == (m + 1) * c_next
        c.detail = (
            "moves distinct as (tree, new leaf) for m <= 6 and cover all (m+1)c(m+1) leaf-marked trees; "
            f"{bare_collisions} collisions if the new leaf is forgotten"
        )


def test_single_contraction_serializes_as_stated():
    assert serialize_tree(sigma(Label.L2, P("(2 *' (1 * *))")).pointed) == "(1' * *)"

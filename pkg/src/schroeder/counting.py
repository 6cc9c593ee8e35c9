"""Exact values of the Schröder and Catalan sequences.

Two independent routes produce the Schröder numbers ``s(n)`` (trees counted
by leaves, ``1, 1, 3, 11, 45, ...``):

* :func:`schroeder_numbers_dp` counts well-weighted binary trees directly.
  A root of weight 1 over any pair of subtrees, plus a root of weight 2 over
  any pair whose right side is not a single leaf, gives::

      w(n) = 2 * sum(w(i) * w(n - i) for i in 1..n-1) - w(n - 1)

* :func:`schroeder_numbers_rec` propagates the three-term recurrence
  ``(n+1) s(n+1) = 3(2n-1) s(n) - (n-2) s(n-1)``.

Catalan numbers ``c(n) = binom(2n-2, n-1) / n`` likewise come from the
closed form and from ``(n+1) c(n+1) = 2(2n-1) c(n)``.  Every division is
exact; a remainder raises :class:`~schroeder.errors.InexactDivision`.
"""

from __future__ import annotations

import enum
import math
import threading
from dataclasses import dataclass

from .errors import InexactDivision

__all__ = [
    "SequenceKind",
    "Recurrence",
    "CountTable",
    "RecurrenceReport",
    "schroeder_numbers_dp",
    "schroeder_numbers_rec",
    "catalan_closed_form",
    "catalan_rec",
    "pointed_counts",
    "verify_recurrence",
]


class SequenceKind(enum.Enum):
    SCHROEDER = "schroeder"
    CATALAN = "catalan"


class Recurrence(enum.Enum):
    SCHROEDER = 1
    CATALAN = 2


@dataclass(frozen=True)
class CountTable:
    """Sequence values indexed from ``n = 1``: ``table[n]`` is the n-th term."""

    kind: SequenceKind
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.values or self.values[0] != 1:
            raise ValueError("a count table starts with the value 1 at n = 1")
        if any(v <= 0 for v in self.values):
            raise ValueError("count tables hold positive integers only")

    @property
    def n_max(self) -> int:
        return len(self.values)

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= len(self.values):
            raise IndexError(f"n = {n} outside 1..{len(self.values)}")
        return self.values[n - 1]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)


@dataclass(frozen=True)
class RecurrenceReport:
    which: Recurrence
    n_max: int
    all_hold: bool
    first_failure: int | None = None

    def __post_init__(self) -> None:
        if self.all_hold != (self.first_failure is None):
            raise ValueError("all_hold must be True exactly when there is no failure")


def _exact_div(numerator: int, denominator: int, n: int) -> int:
    q, r = divmod(numerator, denominator)
    if r:
        raise InexactDivision(f"{numerator} / {denominator} leaves remainder {r} at n = {n}")
    return q


def _require(n: int, lower: int, name: str) -> None:
    if not isinstance(n, int) or n < lower:
        raise ValueError(f"{name} must be an integer >= {lower}, got {n!r}")


_dp_lock = threading.Lock()
_dp_prefix = [0, 1]


def _dp_values(n_max: int) -> tuple[int, ...]:
    # the shared prefix only ever grows, so readers see a consistent slice
    with _dp_lock:
        w = _dp_prefix
        for n in range(len(w), n_max + 1):
            half = n // 2
            # sum over i < n/2 doubled, plus the middle term when n is even
            conv = 2 * sum(w[i] * w[n - i] for i in range(1, (n + 1) // 2))
            if n % 2 == 0:
                conv += w[half] * w[half]
            w.append(2 * conv - w[n - 1])
        return tuple(w[1 : n_max + 1])


def schroeder_numbers_dp(n_max: int) -> CountTable:
    """Schröder numbers s(1..n_max) by counting well-weighted trees."""
    _require(n_max, 1, "n_max")
    return CountTable(SequenceKind.SCHROEDER, _dp_values(n_max))


def schroeder_numbers_rec(n_max: int) -> CountTable:
    """Schröder numbers s(1..n_max) from the three-term recurrence."""
    _require(n_max, 2, "n_max")
    s = [0, 1, 1]
    for n in range(2, n_max):
        s.append(_exact_div(3 * (2 * n - 1) * s[n] - (n - 2) * s[n - 1], n + 1, n))
    return CountTable(SequenceKind.SCHROEDER, tuple(s[1:]))


def catalan_closed_form(n: int) -> int:
    _require(n, 1, "n")
    return _exact_div(math.comb(2 * n - 2, n - 1), n, n)


def catalan_rec(n_max: int) -> CountTable:
    _require(n_max, 1, "n_max")
    c = [0, 1]
    for n in range(1, n_max):
        c.append(_exact_div(2 * (2 * n - 1) * c[n], n + 1, n))
    return CountTable(SequenceKind.CATALAN, tuple(c[1:]))


def pointed_counts(n: int) -> tuple[int, int, int]:
    """Sizes of the pointed, leaf-pointed and interior-pointed sets for n leaves."""
    _require(n, 1, "n")
    s = schroeder_numbers_dp(n)[n]
    return (2 * n - 1) * s, n * s, (n - 1) * s


def verify_recurrence(which: Recurrence, n_max: int) -> RecurrenceReport:
    """Check a recurrence for every index up to ``n_max``; failures are reported.

    The Schröder recurrence is checked for ``2 <= n <= n_max`` with both sides
    taken from the direct count; the Catalan one for ``1 <= n <= n_max`` with
    both sides from the closed form.
    """
    which = Recurrence(which)
    _require(n_max, 2, "n_max")
    if which is Recurrence.SCHROEDER:
        s = (0,) + _dp_values(n_max + 1)
        for n in range(2, n_max + 1):
            if 3 * (2 * n - 1) * s[n] != (n + 1) * s[n + 1] + (n - 2) * s[n - 1]:
                return RecurrenceReport(which, n_max, False, n)
    else:
        c = [0] + [catalan_closed_form(n) for n in range(1, n_max + 2)]
        for n in range(1, n_max + 1):
            if 2 * (2 * n - 1) * c[n] != (n + 1) * c[n + 1]:
                return RecurrenceReport(which, n_max, False, n)
    return RecurrenceReport(which, n_max, True)

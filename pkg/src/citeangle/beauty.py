"""Beauty coefficient and its zero-point form.

``B`` sums, for every year up to the peak year ``t_m``, the gap between the
straight line from ``(0, c_0)`` to ``(t_m, c_m)`` and the actual count,
normalised by ``max(1, c_t)``. ``B'`` is the same sum with the line anchored
at the zero point ``(0, 0)`` instead, i.e. slope ``tan(beta_m) = c_m / t_m``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .angles import _counts


@dataclass(frozen=True)
class BeautyScores:
    b: float
    b_prime: float
    tm: int
    cm: int


def line_value(t: float, t_ref: float, c_ref: float, c0: float = 0.0) -> float:
    if t_ref < 1:
        raise ValueError(f"t_ref must be >= 1, got {t_ref}")
    return (c_ref - c0) / t_ref * t + c0


def global_peak(counts) -> tuple[int, int]:
    """Earliest year of the largest count over ``t in [1, T]``."""
    if len(counts) < 2:
        raise ValueError("need at least one year after publication")
    tm = max(range(1, len(counts)), key=lambda t: (counts[t], -t))
    return tm, counts[tm]


def _gap_sum(counts, tm, cm, c0) -> float:
    # each term is one exact rational division, so integer inputs give
    # correctly rounded terms: scaling all counts by k leaves them bit-identical
    total = 0.0
    for t in range(tm + 1):
        c = counts[t]
        numerator = (cm - c0) * t + (c0 - c) * tm
        total += numerator / (tm * max(1, c))
    return total


def beauty_b(series) -> float:
    counts = _counts(series)
    if not counts:
        raise ValueError("empty series")
    tm, cm = global_peak(counts)
    if cm == 0:
        return 0.0
    return _gap_sum(counts, tm, cm, counts[0])


def beauty_b_prime(series) -> float:
    counts = _counts(series)
    if not counts:
        raise ValueError("empty series")
    tm, cm = global_peak(counts)
    if cm == 0:
        return 0.0
    return _gap_sum(counts, tm, cm, 0)


def beauty_scores(series) -> BeautyScores:
    counts = _counts(series)
    tm, cm = global_peak(counts)
    return BeautyScores(beauty_b(counts), beauty_b_prime(counts), tm, cm)

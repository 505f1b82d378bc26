"""Citation angles.

The geometric origin is the zero point ``(0, 0)``; the publication-year
count ``counts[0]`` never takes part in the angle geometry, so peaks are
searched for ``t >= 1`` only. The citation period ``[1, T]`` is split at
``t_h = T // 2`` into an early half ``[1, t_h]`` and a late half
``[t_h + 1, T]``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence


class SeriesTooShort(ValueError):
    pass


def _counts(series) -> Sequence[int]:
    return series.counts if hasattr(series, "counts") else series


@dataclass(frozen=True)
class AngleProfile:
    t_h: int
    t1: int
    c1: int
    t2: int
    c2: int
    beta1: float
    beta2: float
    tm: int
    cm: int
    betam: float

    @property
    def beta1_deg(self) -> float:
        return math.degrees(self.beta1)

    @property
    def beta2_deg(self) -> float:
        return math.degrees(self.beta2)

    @property
    def betam_deg(self) -> float:
        return math.degrees(self.betam)

    @property
    def dt(self) -> int:
        return self.t2 - self.t1


def half_split(series) -> int:
    T = len(_counts(series)) - 1
    if T < 2:
        raise SeriesTooShort(f"need T >= 2 to split the citation period, got T={T}")
    return T // 2


def find_peak(series, a: int, b: int) -> tuple[int, int]:
    """Largest count over years ``[a, b]``; ties go to the earliest year."""
    counts = _counts(series)
    if a > b:
        raise ValueError(f"empty range [{a}, {b}]")
    if a < 1 or b > len(counts) - 1:
        raise ValueError(f"range [{a}, {b}] outside [1, {len(counts) - 1}]")
    best_t, best_c = a, counts[a]
    for t in range(a + 1, b + 1):
        if counts[t] > best_c:
            best_t, best_c = t, counts[t]
    return best_t, best_c


def angle(c: float, t: float) -> float:
    """Angle in radians of the line from the zero point to ``(t, c)``."""
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    if c < 0:
        raise ValueError(f"c must be >= 0, got {c}")
    return math.atan(c / t)


def citation_angle(c: float, t: float) -> float:
    """Angle in degrees, ``arctan(c / t)``."""
    return math.degrees(angle(c, t))


def angle_profile(series) -> AngleProfile:
    counts = _counts(series)
    t_h = half_split(counts)
    T = len(counts) - 1
    t1, c1 = find_peak(counts, 1, t_h)
    t2, c2 = find_peak(counts, t_h + 1, T)
    # the earliest global maximum over [1, T] is always one of the two half peaks
    tm, cm = (t1, c1) if c1 >= c2 else (t2, c2)
    return AngleProfile(
        t_h=t_h, t1=t1, c1=c1, t2=t2, c2=c2,
        beta1=angle(c1, t1), beta2=angle(c2, t2),
        tm=tm, cm=cm, betam=angle(cm, tm),
    )


def _check_origin(c, t):
    if c == 0 and t == 0:
        raise ValueError("the angle is not differentiable at the zero point")


def beta_gradient(c: float, t: float) -> tuple[float, float]:
    """Partial derivatives ``(d beta/dc, d beta/dt)`` in radians."""
    _check_origin(c, t)
    r2 = t * t + c * c
    return t / r2, -c / r2


def beta_differential(c: float, t: float, dc: float, dt: float) -> float:
    """Total differential of the angle for a change ``(dc, dt)``, in radians."""
    _check_origin(c, t)
    return (t * dc - c * dt) / (t * t + c * c)

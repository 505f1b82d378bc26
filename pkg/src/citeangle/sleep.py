"""Sleeping-period descriptors.

The sleeping period runs from just after the early peak up to the start of
the awakening window (the ``window_len`` years ending at the late peak), so
its mean equals the classifier's ``ac_sb``.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Optional

from .angles import AngleProfile, _counts, angle_profile
from .classify import CriteriaConfig, mean_ac, sleep_window, window_sum

DEEP = "deep"
LESS_DEEP = "less_deep"
NOT_SLEEPING = "not_sleeping"


@dataclass(frozen=True)
class SleepProfile:
    sleep_start: int
    sleep_end: int
    s: int
    cs_mean: Optional[float]
    depth: str
    cw: float
    heartbeat: tuple[int, ...]


def sleep_depth(cs_mean: Optional[float]) -> str:
    if cs_mean is None:
        return NOT_SLEEPING
    if cs_mean <= 1:
        return DEEP
    if cs_mean <= 2:
        return LESS_DEEP
    return NOT_SLEEPING


def detect_sleep(series, profile: AngleProfile | None = None,
                 config: CriteriaConfig | None = None) -> SleepProfile:
    counts = _counts(series)
    config = config or CriteriaConfig()
    profile = profile or angle_profile(counts)
    start, end = sleep_window(profile, config)
    w = int(config.window_len)
    cw = window_sum(counts, profile.t2, w) / w
    s = max(0, end - start + 1)
    heartbeat = tuple(counts[start:end + 1]) if s else ()
    cs = mean_ac(counts, start, end)
    return SleepProfile(start, end, s, cs, sleep_depth(cs), cw, heartbeat)


def grand_sb_density(s: float, cs: float, cw: float, *, cs_floor: float | None = None) -> float:
    """Relative density ``s**-2.7 * cs**2.5 * cw**-6.6`` of sleeping beauties.

    ``cs = 0`` is only accepted when ``cs_floor`` is given; it is then
    replaced by the floor, since the power law vanishes there.
    """
    if s < 1 or cw < 1 or not all(map(math.isfinite, (s, cs, cw))):
        raise ValueError(f"need s >= 1 and cw >= 1, got s={s}, cw={cw}")
    if cs <= 0:
        if cs == 0 and cs_floor is not None:
            warnings.warn(f"cs=0 clamped to {cs_floor}", stacklevel=2)
            cs = cs_floor
        else:
            raise ValueError(f"need cs > 0, got {cs}")
    return s ** -2.7 * cs ** 2.5 * cw ** -6.6

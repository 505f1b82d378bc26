"""Smart-girl / sleeping-beauty classification by threshold criteria.

Each series gets an SG tier and an SB tier (none < possible < typical <
higher) and an ASB flag. Tiers are nested: every "higher" series also
satisfies the "typical" predicate, and every "typical" one the "possible"
predicate.
"""
from __future__ import annotations

import enum
import json
import math
import warnings
from dataclasses import asdict, dataclass, fields
from typing import Optional

from .angles import AngleProfile, _counts, angle_profile


class ConfigError(ValueError):
    pass


class Tier(enum.IntEnum):
    NONE = 0
    POSSIBLE = 1
    TYPICAL = 2
    HIGHER = 3

    def __str__(self):
        return self.name.lower()

    @classmethod
    def parse(cls, value) -> "Tier":
        if isinstance(value, cls):
            return value
        try:
            return cls[str(value).upper()]
        except KeyError:
            raise ValueError(f"unknown tier {value!r}") from None


AC_SG_WINDOWS = ("after_peak", "between_peaks")
SLEEP_FROM = ("after_early_peak", "publication")


@dataclass(frozen=True)
class CriteriaConfig:
    beta1_possible_deg: float = 60.0
    beta1_higher_deg: float = 88.0
    beta2_possible_deg: float = 5.0
    beta2_higher_deg: float = 30.0
    sca_min: float = 20.0
    scb_min: float = 20.0
    ac_sg_max: float = 10.0
    ac_sb_max: float = 2.0
    dt_min: int = 10
    window_len: int = 4
    ac_sg_window: str = "after_peak"
    sleep_from: str = "after_early_peak"
    cs_floor: float = 0.5

    def __post_init__(self):
        numeric = [f.name for f in fields(self) if f.name not in ("ac_sg_window", "sleep_from")]
        for name in numeric:
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(value):
                raise ConfigError(f"{name} must be a finite number, got {value!r}")
            if value <= 0:
                raise ConfigError(f"{name} must be positive, got {value!r}")
        if self.beta1_higher_deg <= self.beta1_possible_deg:
            raise ConfigError("beta1_higher_deg must exceed beta1_possible_deg")
        if self.beta2_higher_deg <= self.beta2_possible_deg:
            raise ConfigError("beta2_higher_deg must exceed beta2_possible_deg")
        if self.beta1_higher_deg >= 90 or self.beta2_higher_deg >= 90:
            raise ConfigError("angle thresholds must be below 90 degrees")
        if int(self.window_len) != self.window_len or int(self.dt_min) != self.dt_min:
            raise ConfigError("window_len and dt_min must be integers")
        if self.ac_sg_window not in AC_SG_WINDOWS:
            raise ConfigError(f"ac_sg_window must be one of {AC_SG_WINDOWS}")
        if self.sleep_from not in SLEEP_FROM:
            raise ConfigError(f"sleep_from must be one of {SLEEP_FROM}")

    @classmethod
    def from_dict(cls, data: dict) -> "CriteriaConfig":
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ConfigError(f"unknown config keys: {', '.join(unknown)}")
        return cls(**data)

    def to_dict(self) -> dict:
        return asdict(self)


def load_config(path=None) -> CriteriaConfig:
    """Read a flat JSON object of threshold overrides; missing keys keep defaults."""
    if path is None:
        return CriteriaConfig()
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"malformed config {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise ConfigError("config must be a flat key-value object")
    return CriteriaConfig.from_dict(data)


@dataclass(frozen=True)
class Evidence:
    beta1_deg: float
    beta2_deg: float
    sca: int
    scb: int
    ac_sg: Optional[float]
    ac_sb: Optional[float]
    dt: int


@dataclass(frozen=True)
class ClassResult:
    sg_tier: Tier
    sb_tier: Tier
    asb: bool
    evidence: Evidence

    @property
    def label(self) -> str:
        """Single label at the typical cut: ``asb``, ``sb``, ``sg`` or ``normal``."""
        return label_for(self, Tier.TYPICAL)


def label_for(result: ClassResult, cut: Tier) -> str:
    if result.asb:
        return "asb"
    if result.sb_tier >= cut:
        return "sb"
    if result.sg_tier >= cut:
        return "sg"
    return "normal"


def window_sum(series, peak_t: int, window_len: int) -> int:
    """Citations over the ``window_len`` years ending at ``peak_t`` (inclusive)."""
    counts = _counts(series)
    if not 1 <= peak_t <= len(counts) - 1:
        raise ValueError(f"peak year {peak_t} outside [1, {len(counts) - 1}]")
    return sum(counts[max(0, peak_t - window_len + 1):peak_t + 1])


def mean_ac(series, from_t: int, to_t: int) -> Optional[float]:
    """Mean annual citations over ``[from_t, to_t]``; ``None`` if the window is empty."""
    counts = _counts(series)
    from_t = max(from_t, 0)
    to_t = min(to_t, len(counts) - 1)
    if from_t > to_t:
        return None
    return sum(counts[from_t:to_t + 1]) / (to_t - from_t + 1)


def sleep_window(profile: AngleProfile, config: CriteriaConfig) -> tuple[int, int]:
    """Quiet interval before the awakening window that ends at the late peak."""
    start = profile.t1 + 1 if config.sleep_from == "after_early_peak" else 0
    return start, profile.t2 - int(config.window_len)


def after_peak_window(profile: AngleProfile, T: int, config: CriteriaConfig) -> tuple[int, int]:
    if config.ac_sg_window == "between_peaks":
        return profile.t1 + 1, profile.t2 - 1
    return profile.t1 + 1, T


def evidence_for(series, config: CriteriaConfig, profile: AngleProfile | None = None) -> Evidence:
    counts = _counts(series)
    profile = profile or angle_profile(counts)
    w = int(config.window_len)
    return Evidence(
        beta1_deg=profile.beta1_deg,
        beta2_deg=profile.beta2_deg,
        sca=window_sum(counts, profile.t1, w),
        scb=window_sum(counts, profile.t2, w),
        ac_sg=mean_ac(counts, *after_peak_window(profile, len(counts) - 1, config)),
        ac_sb=mean_ac(counts, *sleep_window(profile, config)),
        dt=profile.dt,
    )


def _le(value, bound) -> bool:
    return value is not None and value <= bound


def assign_tiers(ev: Evidence, config: CriteriaConfig) -> tuple[Tier, Tier, bool]:
    far_apart = ev.dt >= config.dt_min

    sg = Tier.NONE
    if ev.beta1_deg > config.beta1_possible_deg and ev.sca > config.sca_min:
        sg = Tier.POSSIBLE
        if _le(ev.ac_sg, config.ac_sg_max) and far_apart:
            sg = Tier.TYPICAL
            if ev.beta1_deg > config.beta1_higher_deg:
                sg = Tier.HIGHER

    sb = Tier.NONE
    if ev.beta2_deg > config.beta2_possible_deg and ev.scb > config.scb_min:
        sb = Tier.POSSIBLE
        if _le(ev.ac_sb, config.ac_sb_max) and far_apart:
            sb = Tier.TYPICAL
            if ev.beta2_deg > config.beta2_higher_deg:
                sb = Tier.HIGHER

    asb = sb >= Tier.TYPICAL and ev.beta1_deg > config.beta1_possible_deg and ev.sca > config.sca_min
    return sg, sb, asb


def classify(series, config: CriteriaConfig | None = None) -> ClassResult:
    config = config or CriteriaConfig()
    counts = _counts(series)
    T = len(counts) - 1
    if T < 2 * config.dt_min:
        warnings.warn(f"series spans T={T} years; criteria assume at least {2 * config.dt_min}",
                      stacklevel=2)
    ev = evidence_for(counts, config)
    sg, sb, asb = assign_tiers(ev, config)
    return ClassResult(sg, sb, asb, ev)


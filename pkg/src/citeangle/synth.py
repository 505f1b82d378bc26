"""Seeded synthetic citation curves.

Random streams come from numpy's ``SeedSequence`` + ``PCG64``. Series ``i``
of a corpus draws from ``SeedSequence(seed, spawn_key=(i,))``, so each series
is a function of ``(seed, i)`` alone and the corpus does not depend on how
generation is scheduled.
"""
from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, fields
from typing import NamedTuple

import numpy as np

from .series import CitationSeries, Corpus
from .sleep import grand_sb_density

KINDS = ("sg", "sb", "asb", "normal")
DEFAULT_WEIGHTS = {"sg": 0.03, "sb": 0.001, "normal": 0.969}


@dataclass(frozen=True)
class GenSpec:
    """Generator parameters; ``(lo, hi)`` pairs are inclusive draw ranges."""

    kind: str = "normal"
    length_years: int = 36
    seed: int = 0
    pub_year: int = 1980
    window_len: int = 4
    dt_min: int = 10
    # early burst
    sg_peak_year: tuple = (1, 3)
    sg_peak_height: tuple = (25.0, 80.0)
    sg_decay: tuple = (0.3, 0.6)
    # delayed recognition; the late peak falls at sleep_length + window_len
    sb_sleep_length: tuple = (23, 28)
    sb_depth: tuple = (0.0, 2.0)
    sb_intensity: tuple = (6.0, 15.0)
    sb_decay: tuple = (0.6, 0.85)
    sb_sampling: str = "uniform"
    asb_decay: tuple = (0.05, 0.2)
    normal_level: tuple = (0.0, 2.0)
    noise_mean: float = 0.3
    cs_floor: float = 0.5
    weights: dict = field(default_factory=lambda: dict(DEFAULT_WEIGHTS))

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            if isinstance(value, list):
                object.__setattr__(self, f.name, tuple(value))
        self.check()

    def check(self):
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}, got {self.kind!r}")
        for name in ("sg_peak_year", "sg_peak_height", "sg_decay", "sb_sleep_length", "sb_depth",
                     "sb_intensity", "sb_decay", "asb_decay", "normal_level"):
            lo, hi = getattr(self, name)
            if lo > hi:
                raise ValueError(f"{name}: empty range ({lo}, {hi})")
            if lo < 0:
                raise ValueError(f"{name}: negative bound")
        if self.sg_peak_year[0] < 1:
            raise ValueError("sg_peak_year must start at 1 or later")
        if self.sb_sleep_length[0] < 1 or self.sb_intensity[0] < 1:
            raise ValueError("sb_sleep_length and sb_intensity must be >= 1")
        for name in ("sg_decay", "sb_decay", "asb_decay"):
            if getattr(self, name)[1] >= 1:
                raise ValueError(f"{name} must stay below 1")
        if self.noise_mean < 0:
            raise ValueError("noise_mean must be >= 0")
        if self.sb_sampling not in ("uniform", "grand_sb"):
            raise ValueError("sb_sampling must be 'uniform' or 'grand_sb'")
        self.check_kinds([self.kind])
        unknown = set(self.weights) - set(KINDS)
        if unknown:
            raise ValueError(f"unknown kinds in weights: {sorted(unknown)}")
        if any(w < 0 for w in self.weights.values()) or not math.isclose(sum(self.weights.values()), 1.0,
                                                                         abs_tol=1e-9):
            raise ValueError("weights must be non-negative and sum to 1")

    def check_kinds(self, kinds):
        T = self.length_years - 1
        for kind in kinds:
            if kind in ("sb", "asb") and self.sb_sleep_length[1] + self.window_len > T:
                raise ValueError("late peak would fall past the last year")
            if kind != "normal" and self.length_years < 2 * self.dt_min:
                raise ValueError(f"length_years must be >= {2 * self.dt_min} for {kind}")

    @classmethod
    def from_dict(cls, data: dict) -> "GenSpec":
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ValueError(f"unknown GenSpec keys: {', '.join(unknown)}")
        return cls(**data)

    @classmethod
    def load(cls, path) -> "GenSpec":
        with open(path, encoding="utf-8") as fh:
            return cls.from_dict(json.load(fh))

    def to_dict(self) -> dict:
        return asdict(self)


class GeneratedCorpus(NamedTuple):
    corpus: Corpus
    planted: dict


def _uniform(rng, bounds) -> float:
    lo, hi = bounds
    return float(lo) if lo == hi else float(rng.uniform(lo, hi))


def _integer(rng, bounds) -> int:
    lo, hi = int(bounds[0]), int(bounds[1])
    return lo if lo == hi else int(rng.integers(lo, hi + 1))


def _round(x: float) -> int:
    return int(math.floor(x + 0.5))


def _burst(spec, rng, decay_range, T) -> np.ndarray:
    out = np.zeros(T + 1, dtype=np.int64)
    t1 = _integer(rng, spec.sg_peak_year)
    h = _uniform(rng, spec.sg_peak_height)
    d = _uniform(rng, decay_range)
    for t in range(1, T + 1):
        out[t] = _round(h * d ** abs(t - t1))
    return out


def _sb_params(spec, rng) -> tuple[int, float, float]:
    if spec.sb_sampling == "grand_sb":
        s_grid = np.arange(int(spec.sb_sleep_length[0]), int(spec.sb_sleep_length[1]) + 1)
        cs_grid = np.linspace(*spec.sb_depth, 5)
        cw_grid = np.linspace(*spec.sb_intensity, 10)
        cells = [(s, cs, cw) for s in s_grid for cs in cs_grid for cw in cw_grid]
        dens = np.array([grand_sb_density(s, max(cs, spec.cs_floor), cw) for s, cs, cw in cells])
        s, cs, cw = cells[int(rng.choice(len(cells), p=dens / dens.sum()))]
        return int(s), float(cs), float(cw)
    return (_integer(rng, spec.sb_sleep_length), _uniform(rng, spec.sb_depth),
            _uniform(rng, spec.sb_intensity))


def _delayed(spec, rng, T) -> np.ndarray:
    out = np.zeros(T + 1, dtype=np.int64)
    s, cs, cw = _sb_params(spec, rng)
    d = _uniform(rng, spec.sb_decay)
    w = spec.window_len
    out[1:s + 1] = rng.integers(0, math.floor(cs) + 1, size=s)
    peak_year = s + w
    peak = cw * w / 2
    for k in range(1, w + 1):
        out[s + k] = _round(peak * k / w)
    for t in range(peak_year + 1, T + 1):
        out[t] = _round(peak * d ** (t - peak_year))
    return out


def _draw(kind: str, spec: GenSpec, rng) -> list[int]:
    T = spec.length_years - 1
    if kind == "sg":
        counts = _burst(spec, rng, spec.sg_decay, T)
    elif kind == "sb":
        counts = _delayed(spec, rng, T)
    elif kind == "asb":
        counts = _burst(spec, rng, spec.asb_decay, T) + _delayed(spec, rng, T)
    else:
        level = _uniform(rng, spec.normal_level)
        counts = rng.poisson(level, size=T + 1)
    if spec.noise_mean > 0:
        counts = counts + rng.poisson(spec.noise_mean, size=T + 1)
    return [int(c) for c in counts]


def generate_series(spec: GenSpec, paper_id: str) -> CitationSeries:
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(spec.seed)))
    return CitationSeries(paper_id, spec.pub_year, _draw(spec.kind, spec, rng))


def _series_at(args) -> CitationSeries:
    spec, seed, index, kind = args
    ss = np.random.SeedSequence(seed, spawn_key=(index,))
    rng = np.random.Generator(np.random.PCG64(ss))
    return CitationSeries(paper_id(index), spec.pub_year, _draw(kind, spec, rng))


def paper_id(index: int) -> str:
    return f"syn{index:06d}"


def draw_kinds(weights: dict, n: int, seed: int) -> list[str]:
    kinds = [k for k in KINDS if weights.get(k, 0) > 0]
    p = np.array([weights[k] for k in kinds], dtype=float)
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))
    return [kinds[i] for i in rng.choice(len(kinds), size=n, p=p / p.sum())]


def generate_corpus(spec: GenSpec, n: int, seed: int, *, jobs: int = 1) -> GeneratedCorpus:
    """Draw ``n`` series with kinds sampled from ``spec.weights``.

    ``planted`` maps each ``paper_id`` to the kind it was generated as.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    spec.check_kinds([k for k, w in spec.weights.items() if w > 0])
    kinds = draw_kinds(spec.weights, n, seed)
    tasks = [(spec, seed, i, k) for i, k in enumerate(kinds)]
    if jobs > 1 and n >= 2000:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            series = list(pool.map(_series_at, tasks, chunksize=max(1, n // (4 * jobs))))
    else:
        series = [_series_at(t) for t in tasks]
    planted = {s.paper_id: k for s, k in zip(series, kinds)}
    return GeneratedCorpus(Corpus(series), planted)

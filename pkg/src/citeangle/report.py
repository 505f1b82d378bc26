"""Corpus-level classification reports and plot-data export."""
from __future__ import annotations

import csv
import io
import json
import math
import os
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .angles import AngleProfile, angle_profile
from .beauty import beauty_b, beauty_b_prime
from .classify import CriteriaConfig, Tier, assign_tiers, evidence_for
from .series import DEFAULT_MIN_YEARS, Corpus, SeriesError, validate

NO_CATEGORY = "(none)"
RECORD_FIELDS = ("paper_id", "beta1", "beta2", "betam", "B", "B_prime", "SCa", "SCb",
                 "AC_SG", "AC_SB", "dt", "sg_tier", "sb_tier", "asb")
TIERS = (Tier.POSSIBLE, Tier.TYPICAL, Tier.HIGHER)


@dataclass(frozen=True)
class SeriesRecord:
    paper_id: str
    beta1: float
    beta2: float
    betam: float
    B: float
    B_prime: float
    SCa: int
    SCb: int
    AC_SG: Optional[float]
    AC_SB: Optional[float]
    dt: int
    sg_tier: Tier
    sb_tier: Tier
    asb: bool
    categories: tuple = ()


@dataclass
class CorpusReport:
    records: list
    skipped: list = field(default_factory=list)
    config: Optional[CriteriaConfig] = None

    @property
    def n(self) -> int:
        return len(self.records)

    def tier_counts(self, kind: str) -> dict:
        """Exclusive counts per highest tier reached; they sum to ``n``."""
        attr = f"{kind}_tier"
        counts = {str(t): 0 for t in Tier}
        for r in self.records:
            counts[str(getattr(r, attr))] += 1
        return counts

    def at_least(self, kind: str) -> dict:
        attr = f"{kind}_tier"
        return {str(t): sum(getattr(r, attr) >= t for r in self.records) for t in TIERS}

    def totals(self) -> dict:
        n = self.n
        out = {"classified": n, "skipped": len(self.skipped)}
        for kind in ("sg", "sb"):
            at_least = self.at_least(kind)
            out[kind] = {
                "counts": self.tier_counts(kind),
                "at_least": at_least,
                "percent_at_least": {k: _pct(v, n) for k, v in at_least.items()},
            }
        n_asb = sum(r.asb for r in self.records)
        out["asb"] = {"count": n_asb, "percent": _pct(n_asb, n)}
        return out


def _pct(k: int, n: int) -> float:
    return round(100.0 * k / n, 2) if n else 0.0


def _record(series, config: CriteriaConfig) -> SeriesRecord:
    profile = angle_profile(series)
    ev = evidence_for(series, config, profile)
    sg, sb, asb = assign_tiers(ev, config)
    return SeriesRecord(
        paper_id=series.paper_id, beta1=ev.beta1_deg, beta2=ev.beta2_deg,
        betam=profile.betam_deg, B=beauty_b(series), B_prime=beauty_b_prime(series),
        SCa=ev.sca, SCb=ev.scb, AC_SG=ev.ac_sg, AC_SB=ev.ac_sb, dt=ev.dt,
        sg_tier=sg, sb_tier=sb, asb=asb, categories=series.categories,
    )


def _records_chunk(args):
    chunk, config = args
    return [_record(s, config) for s in chunk]


def classify_corpus(corpus: Corpus, config: CriteriaConfig | None = None, *,
                    min_years: int = DEFAULT_MIN_YEARS, jobs: int | None = 1) -> CorpusReport:
    """Classify every valid series; invalid ones land in ``skipped`` with reasons.

    ``jobs=None`` uses every available core. Records keep input order.
    """
    config = config or CriteriaConfig()
    if len(corpus) == 0:
        raise SeriesError("empty input")
    valid, skipped = [], []
    for s in corpus:
        problems = validate(s, min_years=max(min_years, 2))
        if problems:
            skipped.append({"paper_id": s.paper_id, "reasons": problems})
        else:
            valid.append(s)
    short = sum(s.T < 2 * config.dt_min for s in valid)
    if short:
        warnings.warn(f"{short} series span fewer than {2 * config.dt_min} years", stacklevel=2)

    jobs = jobs or os.cpu_count() or 1
    if jobs > 1 and len(valid) >= 1000:
        size = math.ceil(len(valid) / (4 * jobs))
        chunks = [(valid[i:i + size], config) for i in range(0, len(valid), size)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = [r for part in pool.map(_records_chunk, chunks) for r in part]
    else:
        records = [_record(s, config) for s in valid]
    return CorpusReport(records, skipped, config)


def aggregate_by_category(report: CorpusReport, cut: Tier = Tier.TYPICAL) -> dict:
    """Per-category share of papers at ``cut`` or above, for SG and SB.

    A paper listed under several categories counts once in each of them.
    """
    tallies: dict[str, list[int]] = {}
    for r in report.records:
        for cat in r.categories or (NO_CATEGORY,):
            n, sg, sb = tallies.setdefault(cat, [0, 0, 0])
            tallies[cat] = [n + 1, sg + (r.sg_tier >= cut), sb + (r.sb_tier >= cut)]
    return {
        cat: {"n": n, "sg": sg, "sb": sb, "sg_percent": _pct(sg, n), "sb_percent": _pct(sb, n)}
        for cat, (n, sg, sb) in sorted(tallies.items())
    }


# -- output ------------------------------------------------------------------

def _fmt(value, digits: int = 4) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Tier):
        return str(value)
    if isinstance(value, float):
        return f"{value:.{digits}f}"
    return str(value)


def _json_value(value):
    if isinstance(value, Tier):
        return str(value)
    if isinstance(value, float):
        return round(value, 4)
    return value


def record_row(r: SeriesRecord) -> list[str]:
    return [_fmt(getattr(r, f)) for f in RECORD_FIELDS]


def to_csv(report: CorpusReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(RECORD_FIELDS)
    writer.writerows(record_row(r) for r in report.records)
    return buf.getvalue()


def to_dict(report: CorpusReport) -> dict:
    return {
        "config": report.config.to_dict() if report.config else None,
        "totals": report.totals(),
        "categories": aggregate_by_category(report),
        "records": [{f: _json_value(getattr(r, f)) for f in RECORD_FIELDS} for r in report.records],
        "skipped": report.skipped,
    }


def to_json(report: CorpusReport) -> str:
    return json.dumps(to_dict(report), indent=2, sort_keys=False) + "\n"


def format_stats(report: CorpusReport, by_category: bool = False) -> str:
    lines = [f"classified\t{report.n}", f"skipped\t{len(report.skipped)}"]
    totals = report.totals()
    for kind in ("sg", "sb"):
        for tier, count in totals[kind]["at_least"].items():
            pct = totals[kind]["percent_at_least"][tier]
            lines.append(f"{kind}>={tier}\t{count}\t{pct:.2f}%")
    lines.append(f"asb\t{totals['asb']['count']}\t{totals['asb']['percent']:.2f}%")
    if by_category:
        lines.append("")
        lines.append("category\tn\tsg_typical%\tsb_typical%")
        for cat, row in aggregate_by_category(report).items():
            lines.append(f"{cat}\t{row['n']}\t{row['sg_percent']:.2f}\t{row['sb_percent']:.2f}")
    return "\n".join(lines) + "\n"


# -- plot data ---------------------------------------------------------------

def local_peaks(counts) -> list[int]:
    """Years ``t >= 1`` that rise above their left side and are not exceeded on the right.

    A plateau counts once, at its first year.
    """
    T = len(counts) - 1
    peaks = []
    for t in range(1, T + 1):
        left = counts[t - 1] if t > 1 else -1
        right = next((counts[u] for u in range(t + 1, T + 1) if counts[u] != counts[t]), -1)
        if counts[t] > left and counts[t] > right and counts[t] > 0:
            peaks.append(t)
    return peaks


def emit_curve_data(series, profile: AngleProfile | None = None,
                    lines: str = "peaks") -> tuple[list[str], list[tuple]]:
    """Rows ``(t, c_t, l1(t), l2(t)[, l_<peak>(t)...])`` for plotting.

    ``l1`` and ``l2`` are the lines from the zero point through the early and
    late peaks. ``lines='all-peaks'`` appends one line per local peak.
    """
    counts = series.counts if hasattr(series, "counts") else series
    profile = profile or angle_profile(counts)
    slopes = [profile.c1 / profile.t1, profile.c2 / profile.t2]
    header = ["t", "c", "l1", "l2"]
    if lines == "all-peaks":
        for p in local_peaks(counts):
            slopes.append(counts[p] / p)
            header.append(f"l_t{p}")
    elif lines != "peaks":
        raise ValueError(f"lines must be 'peaks' or 'all-peaks', got {lines!r}")
    rows = [(t, c, *(k * t for k in slopes)) for t, c in enumerate(counts)]
    return header, rows


def format_curve(header, rows) -> str:
    out = ["# " + "\t".join(header)]
    for row in rows:
        out.append("\t".join(str(v) if isinstance(v, int) else f"{v:.10g}" for v in row))
    return "\n".join(out) + "\n"

"""Annual citation series: data model, CSV ingestion and serialization.

A series stores ``counts[t]`` = citations received ``t`` years after the
publication year (``t = 0`` is the publication year itself).

Two file layouts are supported::

    long:  paper_id,year,citations[,category][,pub_year]
    wide:  paper_id,pub_year,c0,c1,...,cN[,categories]

Category cells hold a ``;``-separated list.
"""
from __future__ import annotations

import csv
import io
import logging
import warnings
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Sequence

logger = logging.getLogger(__name__)

MIN_PUB_YEAR = 1000
MAX_PUB_YEAR = 3000
DEFAULT_MIN_YEARS = 10

LONG_HEADER = ("paper_id", "year", "citations")
WIDE_HEADER = ("paper_id", "pub_year")


class SeriesError(ValueError):
    """Raised for malformed citation input."""


@dataclass(frozen=True)
class CitationSeries:
    paper_id: str
    pub_year: int
    counts: tuple[int, ...]
    categories: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(self.counts))
        object.__setattr__(self, "categories", tuple(self.categories))

    @property
    def T(self) -> int:
        """Last year index (``len(counts) - 1``)."""
        return len(self.counts) - 1

    def __len__(self):
        return len(self.counts)


@dataclass(frozen=True)
class Corpus:
    """Ordered, immutable collection of series with unique ``paper_id``."""

    series: tuple[CitationSeries, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "series", tuple(self.series))
        seen = set()
        for s in self.series:
            if s.paper_id in seen:
                raise SeriesError(f"duplicate paper_id {s.paper_id!r}")
            seen.add(s.paper_id)

    def __iter__(self) -> Iterator[CitationSeries]:
        return iter(self.series)

    def __len__(self):
        return len(self.series)

    def __getitem__(self, key):
        if isinstance(key, str):
            for s in self.series:
                if s.paper_id == key:
                    return s
            raise KeyError(key)
        return self.series[key]

    @property
    def ids(self) -> list[str]:
        return [s.paper_id for s in self.series]


def _split_categories(cell) -> list[str]:
    if cell is None:
        return []
    return [c.strip() for c in str(cell).split(";") if c.strip()]


def _as_count(value, where: str) -> int:
    if isinstance(value, bool):
        raise SeriesError(f"{where}: non-integer citation count {value!r}")
    if isinstance(value, int):
        n = value
    else:
        text = str(value).strip()
        try:
            n = int(text)
        except ValueError:
            try:
                f = float(text)
            except ValueError:
                raise SeriesError(f"{where}: non-integer citation count {value!r}") from None
            if not f.is_integer():
                raise SeriesError(f"{where}: non-integer citation count {value!r}")
            n = int(f)
    if n < 0:
        raise SeriesError(f"{where}: negative citation count {n}")
    return n


def _as_year(value, where: str) -> int:
    try:
        return int(str(value).strip())
    except ValueError:
        raise SeriesError(f"{where}: bad year {value!r}") from None


def parse_long(rows: Iterable[Sequence], *, pub_years: dict | None = None,
               zero_fill: bool = False) -> Corpus:
    """Build a corpus from ``(paper_id, year, citations[, category])`` rows.

    The publication year of each paper is the earliest year observed unless
    ``pub_years`` supplies one. Missing years inside the range are an error
    unless ``zero_fill`` is set, in which case they become zeros and a
    warning is emitted.
    """
    pub_years = pub_years or {}
    by_paper: dict[str, dict[int, int]] = {}
    cats: dict[str, list[str]] = {}
    for i, row in enumerate(rows, start=1):
        if len(row) < 3:
            raise SeriesError(f"row {i}: expected paper_id, year, citations")
        pid = str(row[0]).strip()
        if not pid:
            raise SeriesError(f"row {i}: empty paper_id")
        year = _as_year(row[1], f"row {i}")
        n = _as_count(row[2], f"row {i}")
        years = by_paper.setdefault(pid, {})
        if year in years:
            raise SeriesError(f"row {i}: duplicate row for ({pid}, {year})")
        years[year] = n
        paper_cats = cats.setdefault(pid, [])
        if len(row) > 3:
            for c in _split_categories(row[3]):
                if c not in paper_cats:
                    paper_cats.append(c)
    if not by_paper:
        raise SeriesError("empty input")

    out = []
    for pid, years in by_paper.items():
        start = pub_years.get(pid, min(years))
        if min(years) < start:
            raise SeriesError(f"{pid}: citations recorded before pub_year {start}")
        stop = max(years)
        missing = [y for y in range(start, stop + 1) if y not in years]
        if missing:
            if not zero_fill:
                raise SeriesError(f"{pid}: gap in years {missing}")
            warnings.warn(f"{pid}: zero-filling missing years {missing}", stacklevel=2)
        counts = [years.get(y, 0) for y in range(start, stop + 1)]
        out.append(CitationSeries(pid, start, counts, cats[pid]))
    return Corpus(out)


def parse_wide(rows: Iterable[Sequence], *, has_categories: bool = False) -> Corpus:
    """Build a corpus from ``(paper_id, pub_year, c0, ..., cN[, categories])`` rows."""
    out = []
    width = None
    for i, row in enumerate(rows, start=1):
        row = list(row)
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise SeriesError(f"row {i}: ragged row ({len(row)} cells, expected {width})")
        categories = _split_categories(row.pop()) if has_categories else []
        if len(row) < 2:
            raise SeriesError(f"row {i}: expected paper_id and pub_year")
        pid = str(row[0]).strip()
        if not pid:
            raise SeriesError(f"row {i}: empty paper_id")
        pub_year = _as_year(row[1], f"row {i}")
        cells = row[2:]
        if not cells:
            raise SeriesError(f"row {i}: empty series for {pid}")
        counts = [_as_count(c, f"row {i}") for c in cells]
        out.append(CitationSeries(pid, pub_year, counts, categories))
    if not out:
        raise SeriesError("empty input")
    return Corpus(out)


def validate(series: CitationSeries, min_years: int = DEFAULT_MIN_YEARS) -> list[str]:
    """Return the list of invariant violations; an empty list means ok."""
    problems = []
    if not str(series.paper_id).strip():
        problems.append("empty paper_id")
    if not isinstance(series.pub_year, int) or not MIN_PUB_YEAR <= series.pub_year <= MAX_PUB_YEAR:
        problems.append(f"pub_year out of range: {series.pub_year!r}")
    if not series.counts:
        problems.append("empty")
        return problems
    if any(isinstance(c, bool) or not isinstance(c, int) for c in series.counts):
        problems.append("non-integer count")
    elif any(c < 0 for c in series.counts):
        problems.append("negative count")
    if series.T < min_years:
        problems.append(f"too short: T={series.T} < {min_years}")
    return problems


def shift_zero(series: CitationSeries, offset: int) -> CitationSeries:
    """Move the time origin ``offset`` years past publication.

    With ``offset=1`` the year after publication becomes ``t = 0`` and the
    publication-year count is dropped.
    """
    if offset < 0:
        raise ValueError("offset must be >= 0")
    if offset == 0:
        return series
    return CitationSeries(series.paper_id, series.pub_year + offset,
                          series.counts[offset:], series.categories)


# -- files -------------------------------------------------------------------

def sniff_format(header: Sequence[str]) -> str:
    cols = [h.strip().lower() for h in header]
    if "year" in cols and "citations" in cols:
        return "long"
    if "pub_year" in cols and "c0" in cols:
        return "wide"
    raise SeriesError(f"cannot tell long from wide format from header {list(header)}")


def _read_rows(path) -> tuple[list[str], list[list[str]]]:
    try:
        with open(path, newline="", encoding="utf-8") as fh:
            reader = csv.reader(fh)
            header = next(reader, None)
            rows = [r for r in reader if r and any(cell.strip() for cell in r)]
    except OSError as exc:
        raise SeriesError(f"cannot read {path}: {exc}") from exc
    if header is None:
        raise SeriesError("empty input")
    return [h.strip() for h in header], rows


def loads(text: str, fmt: str = "auto", *, zero_fill: bool = False) -> Corpus:
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if header is None:
        raise SeriesError("empty input")
    rows = [r for r in reader if r and any(cell.strip() for cell in r)]
    return _from_table([h.strip() for h in header], rows, fmt, zero_fill)


def read_corpus(path, fmt: str = "auto", *, zero_fill: bool = False) -> Corpus:
    """Read a long or wide CSV file (``fmt='auto'`` sniffs the header)."""
    header, rows = _read_rows(path)
    return _from_table(header, rows, fmt, zero_fill)


def _from_table(header, rows, fmt, zero_fill) -> Corpus:
    if fmt == "auto":
        fmt = sniff_format(header)
    cols = [h.lower() for h in header]
    if fmt == "long":
        try:
            idx = [cols.index(name) for name in LONG_HEADER]
        except ValueError:
            raise SeriesError(f"long format needs columns {LONG_HEADER}, got {header}") from None
        cat_idx = cols.index("category") if "category" in cols else None
        pub_idx = cols.index("pub_year") if "pub_year" in cols else None
        pub_years = {}
        picked = []
        for i, r in enumerate(rows, start=2):
            if len(r) != len(header):
                raise SeriesError(f"line {i}: expected {len(header)} cells, got {len(r)}")
            picked.append([r[j] for j in idx] + ([r[cat_idx]] if cat_idx is not None else []))
            if pub_idx is not None and r[pub_idx].strip():
                pid = r[idx[0]].strip()
                py = _as_year(r[pub_idx], f"line {i}")
                if pub_years.setdefault(pid, py) != py:
                    raise SeriesError(f"line {i}: conflicting pub_year for {pid}")
        return parse_long(picked, pub_years=pub_years, zero_fill=zero_fill)
    if fmt == "wide":
        if cols[:2] != list(WIDE_HEADER):
            raise SeriesError(f"wide format must start with {WIDE_HEADER}, got {header[:2]}")
        has_cats = cols[-1] == "categories"
        return parse_wide(rows, has_categories=has_cats)
    raise SeriesError(f"unknown format {fmt!r}")


def _csv_text(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def long_rows(corpus: Corpus) -> list[tuple]:
    with_cats = any(s.categories for s in corpus)
    rows = []
    for s in corpus:
        for t, c in enumerate(s.counts):
            row = (s.paper_id, s.pub_year + t, c)
            if with_cats:
                row += (";".join(s.categories),)
            rows.append(row)
    return rows


def dumps_long(corpus: Corpus) -> str:
    header = LONG_HEADER + (("category",) if any(s.categories for s in corpus) else ())
    return _csv_text([header, *long_rows(corpus)])


def dumps_wide(corpus: Corpus) -> str:
    lengths = {len(s) for s in corpus}
    if len(lengths) > 1:
        raise SeriesError("wide format needs equal-length series; use long format")
    n = lengths.pop() if lengths else 0
    with_cats = any(s.categories for s in corpus)
    header = list(WIDE_HEADER) + [f"c{t}" for t in range(n)]
    if with_cats:
        header.append("categories")
    rows = [header]
    for s in corpus:
        row = [s.paper_id, s.pub_year, *s.counts]
        if with_cats:
            row.append(";".join(s.categories))
        rows.append(row)
    return _csv_text(rows)


def write_corpus(corpus: Corpus, path, fmt: str = "wide") -> None:
    text = dumps_wide(corpus) if fmt == "wide" else dumps_long(corpus)
    Path(path).write_text(text, encoding="utf-8")

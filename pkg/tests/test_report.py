import json
import math

import pytest

from citeangle.classify import Tier
from citeangle.report import (NO_CATEGORY, RECORD_FIELDS, aggregate_by_category, classify_corpus,
                              emit_curve_data, format_curve, format_stats, local_peaks, to_csv,
                              to_json)
from citeangle.series import CitationSeries, Corpus, SeriesError
from citeangle.synth import GenSpec, generate_corpus

from .conftest import FIX_SB, FIX_SG


def test_fixture_corpus_totals(fixture_corpus):
    report = classify_corpus(fixture_corpus)
    assert [r.paper_id for r in report.records] == ["FIX_SG", "FIX_SB", "FIX_ASB"]
    totals = report.totals()
    assert totals["sg"]["counts"] == {"none": 1, "possible": 0, "typical": 1, "higher": 1}
    assert totals["sb"]["counts"] == {"none": 1, "possible": 0, "typical": 0, "higher": 2}
    assert totals["sg"]["at_least"]["typical"] == 2
    assert totals["sg"]["percent_at_least"]["typical"] == 66.67
    assert totals["asb"] == {"count": 1, "percent": 33.33}


def test_empty_corpus_is_an_error():
    with pytest.raises(SeriesError, match="empty"):
        classify_corpus(Corpus([]))


def test_short_series_skipped():
    report = classify_corpus(Corpus([CitationSeries("tiny", 1980, [0, 3, 1, 2])]))
    assert report.n == 0
    assert report.skipped[0]["paper_id"] == "tiny"
    assert report.skipped[0]["reasons"][0].startswith("too short")


def test_totals_partition_valid_series():
    gen = generate_corpus(GenSpec(weights={"sg": 0.4, "sb": 0.3, "normal": 0.3}), 300, seed=2)
    report = classify_corpus(gen.corpus)
    for kind in ("sg", "sb"):
        assert sum(report.tier_counts(kind).values()) == report.n == 300


def test_parallel_matches_serial():
    gen = generate_corpus(GenSpec(weights={"sg": 0.4, "sb": 0.3, "normal": 0.3}), 1500, seed=8)
    assert to_csv(classify_corpus(gen.corpus, jobs=2)) == to_csv(classify_corpus(gen.corpus))


def test_category_aggregation():
    typical_sg = FIX_SG
    flat = [0] * 21
    corpus = Corpus([CitationSeries(f"p{i}", 1980, typical_sg if i == 0 else flat, ["X"])
                     for i in range(10)])
    cats = aggregate_by_category(classify_corpus(corpus))
    assert cats["X"]["sg_percent"] == 10.0


def test_mixed_categories_count_in_each(fixture_corpus):
    cats = aggregate_by_category(classify_corpus(fixture_corpus))
    assert cats["Physics, Applied"]["n"] == 2
    assert cats["Physics, Applied"]["sb"] == 2
    assert cats["Astronomy & Astrophysics"]["sb"] == 1


def test_uncategorised_bucket():
    corpus = Corpus([CitationSeries("a", 1980, FIX_SB)])
    assert list(aggregate_by_category(classify_corpus(corpus))) == [NO_CATEGORY]


def test_csv_and_json_shape(fixture_corpus):
    report = classify_corpus(fixture_corpus)
    lines = to_csv(report).splitlines()
    assert lines[0].split(",") == list(RECORD_FIELDS)
    first = dict(zip(RECORD_FIELDS, lines[1].split(",")))
    assert first["beta1"] == "88.0908" and first["sg_tier"] == "higher" and first["asb"] == "false"
    doc = json.loads(to_json(report))
    assert doc["records"][2]["asb"] is True
    assert doc["records"][1]["AC_SB"] == 0.75
    assert to_json(report) == to_json(classify_corpus(fixture_corpus))
    stats = format_stats(report, by_category=True)
    assert "sg>=typical\t2\t66.67%" in stats


def test_curve_fixture_values():
    header, rows = emit_curve_data(FIX_SG)
    assert header == ["t", "c", "l1", "l2"]
    t, c, l1, l2 = rows[1]
    assert (t, c, l1) == (1, 30, 30.0)
    assert round(l2, 4) == 0.0909
    assert rows[0] == (0, 0, 0.0, 0.0)
    _, rows = emit_curve_data(FIX_SB)
    assert rows[18] == (18, 22, 9.0, 22.0)


def test_curve_lines_recover_angles():
    from citeangle.angles import angle_profile
    for counts in (FIX_SG, FIX_SB):
        p = angle_profile(counts)
        _, rows = emit_curve_data(counts, p)
        for row in rows[1:]:
            t, _, l1, l2 = row
            assert math.atan(l1 / t) == pytest.approx(p.beta1, abs=1e-9)
            assert math.atan(l2 / t) == pytest.approx(p.beta2, abs=1e-9)


def test_all_peaks_lines():
    counts = [0, 3, 1, 4, 4, 2, 0, 5, 0]
    assert local_peaks(counts) == [1, 3, 7]
    header, rows = emit_curve_data(counts, lines="all-peaks")
    assert header[4:] == ["l_t1", "l_t3", "l_t7"]
    assert rows[7][4:] == (21.0, pytest.approx(28 / 3), 5.0)
    text = format_curve(header, rows)
    assert text.startswith("# t\tc\tl1\tl2")
    with pytest.raises(ValueError):
        emit_curve_data(counts, lines="some")

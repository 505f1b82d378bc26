import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from citeangle.classify import CriteriaConfig, classify
from citeangle.sleep import DEEP, LESS_DEEP, NOT_SLEEPING, detect_sleep, grand_sb_density, sleep_depth

from .conftest import FIX_ASB, FIX_SB


def test_fix_sb_sleep():
    sp = detect_sleep(FIX_SB)
    assert (sp.sleep_start, sp.sleep_end, sp.s) == (3, 14, 12)
    assert sp.cs_mean == 0.75
    assert sp.depth == DEEP
    assert sp.cw == 12.0
    assert sp.heartbeat == (0, 1, 1, 0, 1, 0, 1, 1, 1, 0, 1, 2)


def test_fix_asb_sleep():
    sp = detect_sleep(FIX_ASB)
    assert (sp.sleep_start, sp.sleep_end, sp.s) == (3, 12, 10)
    assert sp.cs_mean == 1.3
    assert sp.depth == LESS_DEEP
    assert sp.cw == 8.75


def test_no_room_to_sleep():
    # early peak at 9, late peak at 11: the awakening window covers the gap
    counts = [0] * 9 + [5, 0, 6] + [0] * 9
    sp = detect_sleep(counts)
    assert sp.s == 0 and sp.depth == NOT_SLEEPING and sp.heartbeat == ()


def test_sleep_from_publication():
    sp = detect_sleep(FIX_SB, config=CriteriaConfig(sleep_from="publication"))
    assert (sp.sleep_start, sp.sleep_end) == (0, 14)


@pytest.mark.parametrize("cs, depth", [(0.0, DEEP), (1.0, DEEP), (1.5, LESS_DEEP), (2.0, LESS_DEEP),
                                       (2.5, NOT_SLEEPING), (None, NOT_SLEEPING)])
def test_depth(cs, depth):
    assert sleep_depth(cs) == depth


@pytest.mark.parametrize("args, expected", [
    ((1, 1, 1), 1.0),
    ((2, 1, 1), 0.1538930516681145),
    ((1, 2, 1), 5.656854249492381),
])
def test_grand_sb_density(args, expected):
    assert grand_sb_density(*args) == pytest.approx(expected, rel=1e-12)


def test_grand_sb_density_domain():
    with pytest.raises(ValueError):
        grand_sb_density(0, 1, 1)
    with pytest.raises(ValueError):
        grand_sb_density(1, 0, 1)
    with pytest.raises(ValueError):
        grand_sb_density(1, 1, 0.5)
    with pytest.warns(UserWarning, match="clamped"):
        assert grand_sb_density(1, 0, 1, cs_floor=0.5) == pytest.approx(0.5 ** 2.5)


@settings(max_examples=300, deadline=None)
@given(st.lists(st.integers(0, 40), min_size=21, max_size=40))
def test_sleep_agrees_with_classifier(counts):
    sp = detect_sleep(counts)
    assert len(sp.heartbeat) == sp.s
    ac_sb = classify(counts).evidence.ac_sb
    assert sp.cs_mean == ac_sb
    if sp.s:
        assert sum(sp.heartbeat) == pytest.approx(sp.s * sp.cs_mean, abs=1e-9)


pos = st.floats(1, 100)


@settings(max_examples=300, deadline=None)
@given(pos, st.floats(0.01, 50), pos, st.floats(0.01, 10))
def test_grand_sb_density_monotone(s, cs, cw, step):
    base = grand_sb_density(s, cs, cw)
    assert grand_sb_density(s + step, cs, cw) < base
    assert grand_sb_density(s, cs, cw + step) < base
    assert grand_sb_density(s, cs + step, cw) > base

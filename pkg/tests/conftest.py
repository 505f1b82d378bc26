import pytest

FIX_SG = [0, 30, 12, 5, 3, 2, 1, 1, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0]
FIX_SB = [0, 0, 1, 0, 1, 1, 0, 1, 0, 1, 1, 1, 0, 1, 2, 3, 8, 15, 22, 18, 12]
FIX_ASB = [0, 5, 25, 3, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 2, 30, 8, 4, 2, 1]

_acceptance = []


@pytest.fixture
def fixture_corpus():
    from citeangle import CitationSeries, Corpus
    return Corpus([
        CitationSeries("FIX_SG", 1980, FIX_SG, ["Multidisciplinary Sciences"]),
        CitationSeries("FIX_SB", 1980, FIX_SB, ["Physics, Applied"]),
        CitationSeries("FIX_ASB", 1980, FIX_ASB, ["Astronomy & Astrophysics", "Physics, Applied"]),
    ])


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")

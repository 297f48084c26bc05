import pytest

from bracketalg.checks import bracket_algebra, nichols_algebra

# acceptance criterion number -> list of (test name, outcome, note)
_ACCEPTANCE: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by a test")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    number, title = marker.args
    expected_to_fail = item.get_closest_marker("xfail") is not None
    if call.excinfo is None:
        # a strict xfail that passes is a failure too
        outcome = "FAIL" if expected_to_fail else "pass"
    elif expected_to_fail:
        outcome = "expected failure"
    else:
        outcome = "FAIL"
    note = getattr(item, "criterion_note", "")
    _ACCEPTANCE.setdefault(number, {"title": title, "parts": []})["parts"].append((item.name, outcome, note))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        entry = _ACCEPTANCE[number]
        main = [p for p in entry["parts"] if p[1] != "expected failure"]
        xf = [p for p in entry["parts"] if p[1] == "expected failure"]
        # a criterion whose literal statement has a documented failing part is
        # reported as FAIL even though the suite stays green
        verdict = "PASS" if main and all(p[1] == "pass" for p in main) and not xf else "FAIL"
        notes = "; ".join(p[2] for p in main if p[2])
        line = f"[{verdict}] criterion {number}: {entry['title']}"
        if notes:
            line += f" ({notes})"
        if xf:
            line += f" [working forms pass; literal parts fail as documented: {', '.join(p[0] for p in xf)}]"
        tr.write_line(line)


@pytest.fixture
def note(request):
    """Attach a short note (e.g. timing) to the acceptance summary line."""

    def add(text: str) -> None:
        prev = getattr(request.node, "criterion_note", "")
        request.node.criterion_note = f"{prev}, {text}" if prev else text

    return add


@pytest.fixture(scope="session")
def be_a3():
    """BE(A_2), complete (dimension 12)."""
    return bracket_algebra("A", 3, 6)


@pytest.fixture(scope="session")
def be_a4():
    """BE(A_3), complete (dimension 576)."""
    return bracket_algebra("A", 4, 6)


@pytest.fixture(scope="session")
def be_b2():
    return bracket_algebra("B", 2, 6)


@pytest.fixture(scope="session")
def be_b3():
    return bracket_algebra("B", 3, 5)


@pytest.fixture(scope="session")
def nichols_b2():
    return nichols_algebra("B", 2, 6)

import sys
from pathlib import Path

import pytest
from hypothesis import settings

settings.register_profile("arrangeo", deadline=None, max_examples=60)
settings.load_profile("arrangeo")

sys.path.insert(0, str(Path(__file__).parent))

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(name, title): acceptance criterion a test belongs to")


@pytest.fixture
def fixtures_dir():
    return FIXTURES


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or report.when not in ("setup", "call"):
        return
    name, title = mark.args
    entry = _criteria.setdefault(name, {"title": title, "failed": [], "ran": 0})
    if report.when == "call":
        entry["ran"] += 1
    if report.failed or (report.when == "call" and report.skipped):
        entry["failed"].append(item.name)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_criteria, key=lambda s: int(s[2:])):
        e = _criteria[name]
        status = "FAIL" if e["failed"] or not e["ran"] else "PASS"
        line = f"{name} {status}  {e['title']}"
        if e["failed"]:
            line += f"  (failing: {', '.join(e['failed'])})"
        terminalreporter.write_line(line)

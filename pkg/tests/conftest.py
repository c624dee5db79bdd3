"""Collects acceptance outcomes and prints one line per criterion at the end."""

import pytest

_OUTCOMES: dict[int, dict] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    num, title = marker.args
    entry = _OUTCOMES.setdefault(num, {"title": title, "results": []})
    entry["results"].append((item.name, report.outcome, report.duration))


def pytest_terminal_summary(terminalreporter):
    if not _OUTCOMES:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for num in sorted(_OUTCOMES):
        entry = _OUTCOMES[num]
        outcomes = [o for _, o, _ in entry["results"]]
        if "failed" in outcomes:
            status = "FAIL"
        elif all(o == "skipped" for o in outcomes):
            status = "SKIP"
        else:
            status = "PASS"
        seconds = sum(d for _, _, d in entry["results"])
        failed = [name for name, o, _ in entry["results"] if o == "failed"]
        detail = f" (failing: {', '.join(failed)})" if failed else ""
        tr.write_line(f"criterion {num:>2} {status}  {entry['title']}  [{seconds:.1f}s]{detail}")

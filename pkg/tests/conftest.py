from __future__ import annotations

import re

import pytest

_ACCEPTANCE: dict[str, str] = {}


def pytest_addoption(parser):
    parser.addoption("--slow", action="store_true", default=False, help="run the slow checks too")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running check, enabled with --slow")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--slow"):
        return
    skip = pytest.mark.skip(reason="needs --slow")
    for item in items:
        if item.get_closest_marker("slow"):
            item.add_marker(skip)


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_(ac\d+)(_slow)?", report.nodeid)
    if not m:
        return
    key = m.group(1).upper() + ("-slow" if m.group(2) else "")
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        verdict = {"passed": "PASS", "failed": "FAIL", "skipped": "SKIP"}[report.outcome]
        _ACCEPTANCE[key] = verdict


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_ACCEPTANCE, key=lambda k: (int(k[2:].split("-")[0]), k)):
        terminalreporter.write_line(f"{key}: {_ACCEPTANCE[key]}")

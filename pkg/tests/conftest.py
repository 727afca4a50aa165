import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

ACCEPTANCE_FILE = "test_acceptance.py"


def pytest_terminal_summary(terminalreporter):
    reports = [r for key in ("passed", "failed", "error") for r in terminalreporter.stats.get(key, [])
               if r.when == "call" and ACCEPTANCE_FILE in r.nodeid]
    if not reports:
        return
    reports.sort(key=lambda r: r.nodeid)
    terminalreporter.section("acceptance criteria")
    for r in reports:
        props = dict(r.user_properties)
        status = "PASS" if r.passed else "FAIL"
        terminalreporter.write_line(f"{status}  {props.get('criterion', r.nodeid)}  ({r.duration:.1f}s)")
        for line in props.get("notes", []):
            terminalreporter.write_line(f"      {line}")

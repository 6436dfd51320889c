import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

_acceptance = []


def pytest_runtest_logreport(report):
    if not report.nodeid.split("::")[0].endswith("test_acceptance.py"):
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _acceptance.append(report)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    from test_acceptance import CRITERIA

    terminalreporter.section("acceptance criteria")
    for report in _acceptance:
        name = report.nodeid.split("::")[-1]
        status = "PASS" if report.passed else "FAIL"
        line = f"{status}  {CRITERIA.get(name, name)}  ({report.duration:.2f} s)"
        if report.failed:
            msg = report.longrepr.reprcrash.message if hasattr(report.longrepr, "reprcrash") else ""
            line += f"  -- {msg.splitlines()[0] if msg else 'failed'}"
        terminalreporter.write_line(line)

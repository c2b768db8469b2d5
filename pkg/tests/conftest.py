"""Collects one summary line per acceptance criterion."""

_lines: list[str] = []


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance" not in report.nodeid:
        return
    props = dict(report.user_properties)
    name = props.get("criterion", report.nodeid.split("::")[-1])
    status = "PASS" if report.passed else "FAIL"
    _lines.append(f"{status}  {name}  {props.get('detail', '')}".rstrip())


def pytest_terminal_summary(terminalreporter):
    if _lines:
        terminalreporter.section("acceptance criteria")
        for line in _lines:
            terminalreporter.write_line(line)

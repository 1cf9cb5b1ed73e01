import hypothesis
import pytest

hypothesis.settings.register_profile(
    "default",
    deadline=None,
    suppress_health_check=[hypothesis.HealthCheck.too_slow],
)
hypothesis.settings.load_profile("default")


class CriterionLog:
    """Collects one pass/fail line per acceptance criterion for the summary."""

    def __init__(self):
        self.lines = []

    def record(self, name: str, passed: bool, detail: str = ""):
        self.lines.append((name, passed, detail))


_criteria = CriterionLog()


@pytest.fixture(scope="session")
def criterion_log():
    return _criteria


def pytest_terminal_summary(terminalreporter):
    if not _criteria.lines:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in _criteria.lines:
        status = "PASS" if passed else "FAIL"
        suffix = f"  [{detail}]" if detail else ""
        terminalreporter.write_line(f"{status}  {name}{suffix}")

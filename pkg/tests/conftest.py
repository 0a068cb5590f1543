import contextlib

import pytest

_criteria: list[str] = []


@pytest.fixture
def criterion():
    """Context manager recording a PASS/FAIL line for an acceptance criterion."""

    @contextlib.contextmanager
    def record(number, title):
        details = []
        try:
            yield details.append
        except BaseException as exc:
            _criteria.append(f"[{number}] FAIL {title}: {type(exc).__name__}: {exc}".splitlines()[0])
            raise
        suffix = f" ({'; '.join(details)})" if details else ""
        _criteria.append(f"[{number}] PASS {title}{suffix}")

    return record


def pytest_terminal_summary(terminalreporter):
    if _criteria:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_criteria, key=lambda l: int(l[1 : l.index("]")])):
            terminalreporter.write_line(line)

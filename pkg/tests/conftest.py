import contextlib

import pytest

_ACCEPTANCE = []


@pytest.fixture
def criterion():
    """Context manager recording one PASS/FAIL line per acceptance criterion."""

    @contextlib.contextmanager
    def record(label):
        try:
            yield
        except BaseException:
            _ACCEPTANCE.append(f"FAIL  {label}")
            print(f"FAIL  {label}")
            raise
        _ACCEPTANCE.append(f"PASS  {label}")
        print(f"PASS  {label}")

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)

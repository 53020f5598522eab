import time

import pytest

ACCEPTANCE_LINES: list[str] = []


class Criterion:
    """Times one acceptance criterion and records a PASS/FAIL line."""

    def __init__(self, number: int, title: str, limit: float):
        self.number, self.title, self.limit = number, title, limit
        self.failures: list[str] = []

    def check(self, ok: bool, what: str) -> None:
        if not ok:
            self.failures.append(what)

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        if exc is not None:
            self.failures.append(f"raised {exc_type.__name__}: {exc}")
        if elapsed >= self.limit:
            self.failures.append(f"took {elapsed:.2f}s, limit {self.limit:g}s")
        status = "FAIL" if self.failures else "PASS"
        line = f"{status} criterion {self.number:2d}: {self.title} ({elapsed:.2f}s < {self.limit:g}s)"
        if self.failures:
            line += " :: " + "; ".join(self.failures[:5])
        ACCEPTANCE_LINES.append(line)
        print(line, flush=True)
        assert not self.failures, line
        return False


@pytest.fixture
def criterion():
    return Criterion


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)

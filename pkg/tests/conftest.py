from pathlib import Path

import pytest

from quasiuc.space import FiniteSpace, discrete_metric

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def fixtures() -> Path:
    return FIXTURES


@pytest.fixture
def upper01() -> FiniteSpace:
    # d_u(x, y) = y - x when y >= x, else 0
    return FiniteSpace.from_rows(["0", "1"], [[0, 1], [0, 0]], name="upper01")


@pytest.fixture
def ent3() -> FiniteSpace:
    # d(c,z) = d(d,z) = 0, every other off-diagonal entry 1
    return FiniteSpace.from_rows(["c", "d", "z"], [[0, 1, 0], [1, 0, 0], [1, 1, 0]], name="ent3")


@pytest.fixture
def disc3() -> FiniteSpace:
    return discrete_metric(["a", "b", "c"], name="disc3")


_ACCEPTANCE: list = []


@pytest.fixture
def acceptance():
    """Record one summary line per acceptance criterion; printed at session end."""

    def record(number: int, ok: bool, detail: str) -> None:
        _ACCEPTANCE.append((number, f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}"))

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for _, line in sorted(_ACCEPTANCE):
        terminalreporter.write_line(line)

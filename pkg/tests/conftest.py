import sys
from pathlib import Path

import pytest

from defrev import check_acyclic, parse_theory

HERE = Path(__file__).parent
FIXTURES = HERE / "fixtures"
sys.path.insert(0, str(HERE))

# acceptance lines collected during the run, printed once at the end
ACCEPTANCE: dict[int, str] = {}


def load(name: str):
    return parse_theory((FIXTURES / f"{name}.dlt").read_text(encoding="utf-8"))


def assert_outcome_sound(out):
    """Every outcome relation is acyclic; removal-only diffs stay inside the
    original relation."""
    if out.new_superiority is None:
        return
    assert check_acyclic(out.new_superiority), out.report()
    if not out.added:
        assert out.new_superiority <= out.original.superiority
        assert check_acyclic(out.original.superiority - out.removed)


@pytest.fixture
def fixture_theory():
    return load


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance")
    for n in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[n])

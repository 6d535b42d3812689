import pytest

from dpflmd.core import Dataset
from dpflmd.io import SyntheticSpec, generate_synthetic

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def small_dataset():
    return Dataset.from_strings(["ACGTAC", "AAGT", "CCGTT", "TGCA"])


@pytest.fixture(scope="session")
def planted_dataset():
    return generate_synthetic(SyntheticSpec(120, 30, planted_motif=("ACGTA", "TTGCA"), plant_rate=0.6, seed=11))

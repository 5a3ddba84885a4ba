import pytest

from tribsq.discovery import random_specs
from tribsq.sequence import SequenceSpec

ACCEPTANCE_LINES: list[str] = []


def naive_terms(spec, lo, hi):
    """Brute-force T[lo..hi] as a dict, by iterating the defining recurrence."""
    t = {0: spec.t0, 1: spec.t1, 2: spec.t2}
    for n in range(3, max(hi, 2) + 1):
        t[n] = t[n - 1] + t[n - 2] + t[n - 3]
    for n in range(-1, min(lo, 0) - 1, -1):
        t[n] = t[n + 3] - t[n + 2] - t[n + 1]
    return t


@pytest.fixture
def prng_specs():
    return random_specs(20, rng_seed=1234)


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


SPEC_SAMPLES = [SequenceSpec(0, 1, 1), SequenceSpec(1, 0, 0), SequenceSpec(2, 2, 2), SequenceSpec(5, -3, 2)]

import math

import pytest

from nfk import dickson as dk


def brute_totient(n):
    return sum(1 for a in range(1, n + 1) if math.gcd(a, n) == 1)


@pytest.fixture(scope="session")
def small_pairs():
    """Dickson pairs (n >= 2) with q^n - 1 <= 400."""
    return dk.dickson_pairs(400)


@pytest.fixture(scope="session")
def tables():
    cache = {}

    def get(q, n):
        if (q, n) not in cache:
            cache[q, n] = dk.build_group_table(dk.validate_dickson_pair(q, n))
        return cache[q, n]

    return get


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)

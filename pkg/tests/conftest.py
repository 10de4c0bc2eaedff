import pytest

from stanleyverify import build_count_table


def brute_partitions(n):
    """Partitions of n by plain recursion on the largest part; independent of the package."""
    out = []

    def rec(rem, largest, acc):
        if rem == 0:
            out.append(tuple(acc))
            return
        for v in range(min(rem, largest), 0, -1):
            rec(rem - v, v, acc + [v])

    rec(n, n, [])
    return out


@pytest.fixture(scope="session")
def table():
    return build_count_table(700)

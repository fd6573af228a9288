import itertools
from collections import Counter

import pytest


def set_partition_counts(n):
    """Counter {k: number of partitions of an n-set into k blocks}, by enumeration."""

    def partitions(items):
        if not items:
            yield []
            return
        first, rest = items[0], items[1:]
        for part in partitions(rest):
            for i in range(len(part)):
                yield part[:i] + [[first] + part[i]] + part[i + 1:]
            yield [[first]] + part

    return Counter(len(p) for p in partitions(list(range(n))))


def descent_counts(n):
    """Counter {j: permutations of n elements with exactly j descents}."""
    return Counter(
        sum(p[i] > p[i + 1] for i in range(n - 1)) for p in itertools.permutations(range(n))
    )


@pytest.fixture(scope="session")
def partition_oracle():
    return {n: set_partition_counts(n) for n in range(1, 9)}


@pytest.fixture(scope="session")
def descent_oracle():
    return {n: descent_counts(n) for n in range(1, 9)}

"""Shared fixtures: classical configurations, the worked seven-point
example, and the deterministic random corpus."""

from __future__ import annotations

import random
from math import gcd

import pytest

from discforge.config import (
    GaleConfiguration,
    PointConfiguration,
    cayley,
    segment,
)

CORPUS_SEED = 53419


def random_codim1_vectors(count: int = 50) -> list[tuple[int, ...]]:
    """Primitive homogeneous vectors without zeros, 3 to 5 entries in
    [-4, 4], drawn from a fixed seed so every run sees the same corpus."""
    rng = random.Random(CORPUS_SEED)
    out: list[tuple[int, ...]] = []
    seen = set()
    sizes = [3, 4, 5]
    while len(out) < count:
        n = sizes[len(out) % 3]
        b = tuple(rng.choice([x for x in range(-4, 5) if x]) for _ in range(n))
        if sum(b) != 0:
            continue
        g = 0
        for x in b:
            g = gcd(g, x)
        if g != 1 or b in seen:
            continue
        seen.add(b)
        out.append(b)
    return out


@pytest.fixture(scope="session")
def corpus_vectors():
    return random_codim1_vectors()


@pytest.fixture
def twisted_cubic() -> PointConfiguration:
    return PointConfiguration([[1, 1, 1, 1], [0, 1, 2, 3]])


@pytest.fixture
def quadratic() -> PointConfiguration:
    return PointConfiguration([[1, 1, 1], [0, 1, 2]])


SEVEN_ROWS = [[0, 1], [-3, 1], [2, -3], [-1, 1], [1, 0], [3, 0], [-2, 0]]


@pytest.fixture
def seven_point_b() -> GaleConfiguration:
    return GaleConfiguration(SEVEN_ROWS)


@pytest.fixture
def cay222() -> PointConfiguration:
    return cayley([segment(2), segment(2), segment(2)])

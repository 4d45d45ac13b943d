"""Shared pytest fixtures for tests."""

import random
from pathlib import Path
from typing import Callable

import pytest

from homlab.config import Guards
from homlab.structures.structure import Structure

SEED = 20240611


@pytest.fixture
def resources_dir():
    """Fixture providing the directory with structure, operation and system files."""
    return Path(__file__).parent / "resources"


@pytest.fixture
def rng():
    """A seeded random generator, so property tests are reproducible."""
    return random.Random(SEED)


@pytest.fixture
def random_digraph(rng) -> Callable[..., Structure]:
    """Fixture factory for random digraphs.

    Usage:
        def test_something(random_digraph):
            g = random_digraph(5, 0.3)
            g = random_digraph(4, 0.5, symmetric=True, loops=False)
    """
    def _create(n: int, p: float, symmetric: bool = False, loops: bool = False) -> Structure:
        edges = set()
        for u in range(n):
            for v in range(n):
                if u == v and not loops:
                    continue
                if symmetric and v < u:
                    continue
                if rng.random() < p:
                    edges.add((u, v))
                    if symmetric:
                        edges.add((v, u))
        return Structure.digraph(n, edges)

    return _create


@pytest.fixture
def small_guards():
    """Guards low enough that the cap paths are reachable in unit tests."""
    return Guards(max_domain=4, max_powerset_domain=3, max_arity=3, max_states=500, max_solutions=5, max_pp_states=100)

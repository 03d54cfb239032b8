import random

import pytest

from eqeuler.catalog import small_groups
from eqeuler.gcomplex import GSimplicialComplex, s3_sphere3, s3_sphere5, validate_and_subdivide

import oracles


@pytest.fixture(scope="session")
def sphere3():
    return s3_sphere3()


@pytest.fixture(scope="session")
def sphere5():
    return s3_sphere5()


@pytest.fixture(scope="session")
def groups16():
    return small_groups(16)


def random_complexes(count, seed, max_order=12, names=None):
    """Deterministic list of (group name, admissible complex)."""
    rng = random.Random(seed)
    pool = [(n, G) for n, G in small_groups(max_order) if names is None or n in names]
    out = []
    for _ in range(count):
        name, G = rng.choice(pool)
        n, simp, imgs = oracles.random_complex_data(G, rng)
        out.append((name, validate_and_subdivide(GSimplicialComplex.from_data(G, n, simp, imgs))))
    return out


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])

import itertools

import pytest

from ribbonmut import ArrowPresentation, PopulationSpec, enumerate_ribbon_graphs


def ap(*words):
    return ArrowPresentation.from_words(*words)


@pytest.fixture(scope="session")
def small_population():
    return enumerate_ribbon_graphs(PopulationSpec(max_edges=2, max_vertices=2))


def gf2_det_bruteforce(m):
    """Leibniz expansion mod 2: the permanent and determinant agree."""
    n = len(m)
    if n == 0:
        return 1
    total = 0
    for perm in itertools.permutations(range(n)):
        prod = 1
        for i, j in enumerate(perm):
            prod &= m[i][j]
        total ^= prod
    return total

import math
import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("repo", deadline=None, derandomize=True,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repo")

from fuchsian_schottky import build_hyperbolic, compose, isometric_circles, SchottkySystem  # noqa: E402

LOG10x2 = 2.0 * math.log(10.0)


@pytest.fixture(scope="session")
def pair_ab():
    """Disjoint-axes classical pair: A along (-3, -1), B along (3, 1)."""
    return build_hyperbolic(-3, -1, LOG10x2), build_hyperbolic(3, 1, LOG10x2)


@pytest.fixture(scope="session")
def system_ab(pair_ab):
    A, B = pair_ab
    return SchottkySystem([A, B], [isometric_circles(A), isometric_circles(B)])


@pytest.fixture(scope="session")
def pair_a_ab(pair_ab):
    A, B = pair_ab
    return A, compose(A, B)

import pytest

from multibgg.config import Config
from multibgg.core import Field, mk_poly_ring
from multibgg.diffmod import DifferentialModule
from multibgg.io.builtins import hirzebruch, weighted_projective
from multibgg.io.parser import parse_rows
from multibgg.modules import FreeModule, GradedMatrix


@pytest.fixture(autouse=True)
def reset_config():
    """Jobs write their options into Config; start every test from the defaults."""
    Config.theta_search_bound = 10
    Config.default_max_iter = None
    yield
    Config.theta_search_bound = 10
    Config.default_max_iter = None


@pytest.fixture
def r101():
    """ZZ/101[x, y], standard grading."""
    return mk_poly_ring(Field.prime(101), ["x", "y"], [(1,), (1,)])


@pytest.fixture
def qq_xy():
    return mk_poly_ring(Field.rationals(), ["x", "y"], [(1,), (1,)])


@pytest.fixture
def hirzebruch3():
    return hirzebruch(3)


@pytest.fixture
def wp11122():
    return weighted_projective([1, 1, 1, 2, 2])


@pytest.fixture
def degree_two_dm(r101):
    """Free rank 2 differential module of degree 2 with H(D) = k(-1)."""
    G = FreeModule.of(r101, [(0,), (0,)])
    rows = parse_rows(r101, [["x*y", "-x^2"], ["y^2", "-x*y"]])
    return DifferentialModule.free(GradedMatrix.of(G, G, rows, (2,)))

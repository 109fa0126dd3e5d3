from dataclasses import dataclass
from itertools import product
from typing import Optional, Sequence, Tuple

import numpy as np

from multibgg.colorized_logger import get_logger
from multibgg.config import Config
from multibgg.errors import InvalidRingError, NotPositivelyGraded
from multibgg.utils import Degree, deg, dot

logger = get_logger('multibgg.core.Grading')


@dataclass(frozen=True)
class GradingSpec:
    rank: int
    var_degrees: Tuple[Degree, ...]
    theta: Optional[Tuple[int, ...]] = None
    """positivity functional; searched for on demand when absent"""

    def __post_init__(self):
        if self.rank < 1:
            raise InvalidRingError("grading rank must be at least 1", "/degrees")
        for i, d in enumerate(self.var_degrees):
            if len(d) != self.rank:
                raise InvalidRingError(f"degree of variable {i} has length {len(d)}, expected {self.rank}",
                                       f"/degrees/{i}")
        if self.theta is not None:
            if len(self.theta) != self.rank:
                raise InvalidRingError(f"theta has length {len(self.theta)}, expected {self.rank}", "/theta")
            bad = [i for i, d in enumerate(self.var_degrees) if dot(self.theta, d) <= 0]
            if bad:
                raise NotPositivelyGraded(f"theta {self.theta} is not positive on the degrees of variables {bad}")

    @staticmethod
    def of(degrees: Sequence[Sequence[int]], theta: Optional[Sequence[int]] = None) -> "GradingSpec":
        degrees = tuple(deg(d) for d in degrees)
        rank = len(degrees[0]) if degrees else 0
        return GradingSpec(rank, degrees, None if theta is None else deg(theta))

    def positivity(self) -> Tuple[int, ...]:
        """The supplied theta, else the searched one."""
        if self.theta is not None:
            return self.theta
        return find_positivity_functional(self, Config.theta_search_bound)

    def weight(self, d: Degree) -> int:
        return dot(self.positivity(), d)

    def zero(self) -> Degree:
        return (0,) * self.rank


def find_positivity_functional(grading: GradingSpec, bound: int) -> Tuple[int, ...]:
    """
    Lexicographically smallest integer vector theta with |theta_k| <= bound and
    theta . deg(x_i) > 0 for every variable.
    """
    if bound < 1:
        raise ValueError("bound must be at least 1")
    return _search_theta(grading.var_degrees, grading.rank, bound)


_theta_cache = {}


def _search_theta(var_degrees, rank, bound):
    key = (var_degrees, rank, bound)
    if key in _theta_cache:
        return _theta_cache[key]

    degrees = np.array(var_degrees, dtype=np.int64).reshape(len(var_degrees), rank)
    box = np.array(list(product(range(-bound, bound + 1), repeat=rank)), dtype=np.int64)
    ok = np.all(box @ degrees.T > 0, axis=1)
    hits = np.flatnonzero(ok)
    if hits.size == 0:
        raise NotPositivelyGraded(f"no positivity functional with coordinates bounded by {bound}; "
                                  f"raise the bound (--theta-bound) or supply theta explicitly")
    theta = tuple(int(x) for x in box[hits[0]])
    logger.debug("positivity functional for %s: %s", var_degrees, theta)
    _theta_cache[key] = theta
    return theta

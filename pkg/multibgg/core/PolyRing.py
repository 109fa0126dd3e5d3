from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import List, Optional, Sequence, Tuple

from multibgg.colorized_logger import get_logger
from multibgg.core.Field import Field
from multibgg.core.Grading import GradingSpec
from multibgg.core.Polynomial import Exponent, Polynomial
from multibgg.errors import InvalidRingError
from multibgg.utils import Degree, deg, deg_scale, deg_sub, dot

logger = get_logger('multibgg.core.PolyRing')


@dataclass(frozen=True)
class PolyRing:
    """S = k[x_0, ..., x_n] graded by Z^t through `grading.var_degrees`."""
    field: Field
    var_names: Tuple[str, ...]
    grading: GradingSpec

    def __post_init__(self):
        if not self.var_names:
            raise InvalidRingError("a ring needs at least one variable", "/vars")
        if len(self.var_names) != len(self.grading.var_degrees):
            raise InvalidRingError(f"{len(self.var_names)} variables but {len(self.grading.var_degrees)} degrees",
                                   "/degrees")
        if len(set(self.var_names)) != len(self.var_names):
            raise InvalidRingError("variable names must be distinct", "/vars")

    def __repr__(self):
        return f"{self.field.name}[{', '.join(self.var_names)}]"

    @property
    def nvars(self) -> int:
        return len(self.var_names)

    @property
    def rank(self) -> int:
        return self.grading.rank

    @property
    def var_degrees(self) -> Tuple[Degree, ...]:
        return self.grading.var_degrees

    @cached_property
    def theta(self) -> Tuple[int, ...]:
        return self.grading.positivity()

    @cached_property
    def var_weights(self) -> Tuple[int, ...]:
        return tuple(dot(self.theta, d) for d in self.var_degrees)

    def zero_degree(self) -> Degree:
        return (0,) * self.rank

    def degree_of(self, exp: Exponent) -> Degree:
        total = [0] * self.rank
        for k, d in zip(exp, self.var_degrees):
            if k:
                for j in range(self.rank):
                    total[j] += k * d[j]
        return tuple(total)

    def weight_of(self, exp: Exponent) -> int:
        return sum(k * w for k, w in zip(exp, self.var_weights))

    def check_degree(self, d) -> Degree:
        d = deg(d)
        if len(d) != self.rank:
            raise InvalidRingError(f"degree {d} has length {len(d)}, expected {self.rank}")
        return d

    def weight(self, d: Degree) -> int:
        return dot(self.theta, self.check_degree(d))

    # element constructors

    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    def one(self) -> Polynomial:
        return self.scalar(1)

    def scalar(self, c) -> Polynomial:
        return Polynomial(self, {(0,) * self.nvars: self.field(c)})

    def monomial(self, exp: Exponent, c=1) -> Polynomial:
        return Polynomial(self, {tuple(exp): self.field(c)})

    def var(self, i: int) -> Polynomial:
        exp = [0] * self.nvars
        exp[i] = 1
        return self.monomial(tuple(exp))

    @property
    def gens(self) -> List[Polynomial]:
        return [self.var(i) for i in range(self.nvars)]

    def variable(self, name: str) -> Polynomial:
        try:
            return self.var(self.var_names.index(name))
        except ValueError:
            raise KeyError(f"unknown variable {name!r} in {self}") from None

    def monomials_of_degree(self, d: Degree) -> Tuple[Exponent, ...]:
        return monomials_of_degree(self, self.check_degree(d))


def mk_poly_ring(field: Field, names: Sequence[str], degrees: Sequence[Sequence[int]],
                 theta: Optional[Sequence[int]] = None) -> PolyRing:
    if not names:
        raise InvalidRingError("a ring needs at least one variable", "/vars")
    if len(names) != len(degrees):
        raise InvalidRingError(f"{len(names)} variables but {len(degrees)} degrees", "/degrees")
    normalized = [deg(d) for d in degrees]
    rank = len(normalized[0])
    for i, d in enumerate(normalized):
        if len(d) != rank:
            raise InvalidRingError(f"degree vector has length {len(d)}, expected {rank}", f"/degrees/{i}")
    return PolyRing(field, tuple(names), GradingSpec.of(normalized, theta))


@lru_cache(maxsize=4096)
def monomials_of_degree(ring: PolyRing, d: Degree) -> Tuple[Exponent, ...]:
    """
    Every monomial of multidegree exactly d, largest exponent vector first.
    Depth-first over the variables with the theta-weight as pruning bound.
    """
    n = ring.nvars
    weights = ring.var_weights
    degrees = ring.var_degrees
    target = ring.weight(d)
    if target < 0:
        return ()

    found = []
    exp = [0] * n

    def dfs(i: int, remaining_weight: int, remaining_degree: Degree):
        if i == n - 1:
            w = weights[i]
            if remaining_weight % w:
                return
            k = remaining_weight // w
            if deg_scale(k, degrees[i]) == remaining_degree:
                exp[i] = k
                found.append(tuple(exp))
                exp[i] = 0
            return
        for k in range(remaining_weight // weights[i] + 1):
            exp[i] = k
            dfs(i + 1, remaining_weight - k * weights[i], deg_sub(remaining_degree, deg_scale(k, degrees[i])))
        exp[i] = 0

    dfs(0, target, d)
    found.sort(reverse=True)
    return tuple(found)

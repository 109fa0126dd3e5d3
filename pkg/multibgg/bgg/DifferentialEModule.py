from dataclasses import dataclass
from typing import Optional, Tuple

from multibgg.core.ExtAlgebra import ExtAlgebra, ExtElement
from multibgg.errors import Inhomogeneous, NotSquareZero
from multibgg.utils import Degree, deg_add, format_degree


@dataclass(frozen=True)
class DifferentialEModule:
    """
    Free right E-module with generators in degrees `twists` and a square-zero
    differential of degree (0; -1): target twist + deg(entry) = source twist + (0; -1).
    """
    ring: ExtAlgebra
    twists: Tuple[Degree, ...]
    entries: Tuple[Tuple[ExtElement, ...], ...]
    sources: Optional[Tuple[Degree, ...]] = None
    """degree d of M_d each generator came from, when built by toric_rr"""

    def __post_init__(self):
        n = len(self.twists)
        if len(self.entries) != n or any(len(row) != n for row in self.entries):
            raise ValueError(f"differential is not a {n} x {n} matrix")
        shift = self.shift
        for i, row in enumerate(self.entries):
            for j, f in enumerate(row):
                if f and deg_add(self.twists[i], f.degree) != deg_add(self.twists[j], shift):
                    raise Inhomogeneous(f"entry ({i}, {j}) = {f} does not have degree (0; -1) between "
                                        f"{format_degree(self.twists[j])} and {format_degree(self.twists[i])}")
        if any(f for row in self.square() for f in row):
            raise NotSquareZero("the differential of the E-module does not square to zero")

    @property
    def shift(self) -> Degree:
        return (0,) * (self.ring.rank - 1) + (-1,)

    @property
    def rank(self) -> int:
        return len(self.twists)

    def square(self) -> Tuple[Tuple[ExtElement, ...], ...]:
        n = self.rank
        out = []
        for i in range(n):
            row = []
            for k in range(n):
                acc = self.ring.zero()
                for j in range(n):
                    a, b = self.entries[i][j], self.entries[j][k]
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(tuple(row))
        return tuple(out)

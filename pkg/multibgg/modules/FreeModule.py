from dataclasses import dataclass
from typing import Sequence, Tuple

from multibgg.core.PolyRing import PolyRing
from multibgg.errors import InvalidRingError, RingMismatch
from multibgg.utils import Degree, deg, deg_neg, deg_sub, format_degree


@dataclass(frozen=True)
class FreeModule:
    """
    Graded free module. Generator i sits in degree twists[i], so S(-a) is
    FreeModule(S, (a,)).
    """
    ring: PolyRing
    twists: Tuple[Degree, ...]

    def __post_init__(self):
        for i, t in enumerate(self.twists):
            if len(t) != self.ring.rank:
                raise InvalidRingError(f"twist of length {len(t)} in a rank {self.ring.rank} grading",
                                       f"/twists/{i}")

    @staticmethod
    def of(ring: PolyRing, twists: Sequence[Sequence[int]]) -> "FreeModule":
        return FreeModule(ring, tuple(deg(t) for t in twists))

    @staticmethod
    def free(ring: PolyRing, rank: int) -> "FreeModule":
        return FreeModule(ring, (ring.zero_degree(),) * rank)

    @property
    def rank(self) -> int:
        return len(self.twists)

    def __repr__(self):
        return f"{self.ring}^{{{', '.join(format_degree(t) for t in self.twists)}}}"

    def twisted(self, b: Degree) -> "FreeModule":
        """F(b): every generator degree moves by -b."""
        return FreeModule(self.ring, tuple(deg_sub(t, b) for t in self.twists))

    def __add__(self, other: "FreeModule") -> "FreeModule":
        if other.ring != self.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")
        return FreeModule(self.ring, self.twists + other.twists)

    def dual(self, c: Degree = None) -> "FreeModule":
        """Hom(F, S(c)) with the dual basis."""
        c = c if c is not None else self.ring.zero_degree()
        return FreeModule(self.ring, tuple(deg_sub(deg_neg(t), c) for t in self.twists))

    def select(self, indices: Sequence[int]) -> "FreeModule":
        return FreeModule(self.ring, tuple(self.twists[i] for i in indices))

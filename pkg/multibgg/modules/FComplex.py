from dataclasses import dataclass, field
from typing import Dict, List

from multibgg.errors import NotSquareZero
from multibgg.modules.FreeModule import FreeModule
from multibgg.modules.GradedMatrix import GradedMatrix


@dataclass(frozen=True, eq=False)
class FComplex:
    """
    Finite complex of graded free modules: terms[i] = C_i and
    differentials[i] = d_i : C_i -> C_(i-1), all of degree zero.
    """
    ring: object
    terms: Dict[int, FreeModule]
    differentials: Dict[int, GradedMatrix] = field(default_factory=dict)

    def __post_init__(self):
        for i, d in self.differentials.items():
            if d.source != self.term(i) or d.target != self.term(i - 1):
                raise ValueError(f"differential d_{i} does not map C_{i} to C_{i - 1}")
        for i in self.differentials:
            if i + 1 in self.differentials and not (self.differentials[i] @ self.differentials[i + 1]).is_zero():
                raise NotSquareZero(f"d_{i} . d_{i + 1} is not zero")

    def term(self, i: int) -> FreeModule:
        return self.terms.get(i, FreeModule(self.ring, ()))

    def differential(self, i: int) -> GradedMatrix:
        if i in self.differentials:
            return self.differentials[i]
        return GradedMatrix.zero(self.term(i), self.term(i - 1))

    @property
    def indices(self) -> List[int]:
        return sorted(i for i, F in self.terms.items() if F.rank)

    @property
    def ranks(self) -> Dict[int, int]:
        return {i: self.terms[i].rank for i in self.indices}

    @property
    def length(self) -> int:
        idx = self.indices
        return idx[-1] - idx[0] if idx else 0

    def __eq__(self, other):
        if not isinstance(other, FComplex):
            return NotImplemented
        nonzero = lambda C: {i: d for i, d in C.differentials.items() if not d.is_zero()}
        return (self.ring == other.ring and self.ranks == other.ranks
                and all(self.term(i) == other.term(i) for i in self.indices)
                and nonzero(self) == nonzero(other))

    def __str__(self):
        from multibgg.io.render import render_complex
        return render_complex(self)

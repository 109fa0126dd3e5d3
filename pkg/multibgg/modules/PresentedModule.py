from dataclasses import dataclass
from typing import Sequence

from multibgg.errors import Inhomogeneous
from multibgg.modules.FreeModule import FreeModule
from multibgg.modules.GradedMatrix import GradedMatrix
from multibgg.modules.vectors import SVec


@dataclass(frozen=True)
class PresentedModule:
    """coker(relations: R -> generators), relations of degree zero."""
    generators: FreeModule
    relations: GradedMatrix

    def __post_init__(self):
        if self.relations.target != self.generators:
            raise ValueError("relations must map into the generators")
        if any(self.relations.shift):
            raise Inhomogeneous("relation matrix must have degree zero")

    @staticmethod
    def cokernel(phi: GradedMatrix) -> "PresentedModule":
        if any(phi.shift):
            phi = phi.as_shift(phi.ring.zero_degree())
        return PresentedModule(phi.target, phi)

    @staticmethod
    def free(F: FreeModule) -> "PresentedModule":
        return PresentedModule(F, GradedMatrix.zero(FreeModule(F.ring, ()), F))

    @staticmethod
    def from_columns(generators: FreeModule, columns: Sequence[SVec]) -> "PresentedModule":
        columns = [v for v in columns if v]
        if not columns:
            return PresentedModule.free(generators)
        return PresentedModule(generators, GradedMatrix.with_columns(generators, columns))

    @property
    def ring(self):
        return self.generators.ring

    @property
    def rank(self) -> int:
        return self.generators.rank

    def is_free(self) -> bool:
        return self.relations.is_zero()

    def __repr__(self):
        return f"cokernel {self.relations.nrows} x {self.relations.ncols} over {self.ring}"

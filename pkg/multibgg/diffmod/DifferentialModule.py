from dataclasses import dataclass
from typing import Optional, Tuple

from multibgg.errors import NotAFlag, NotAMorphism, NotSquareZero, RelationsNotPreserved
from multibgg.groebner.GroebnerBasis import buchberger
from multibgg.groebner.syzygies import check_relations_preserved
from multibgg.modules.FreeModule import FreeModule
from multibgg.modules.GradedMatrix import GradedMatrix
from multibgg.modules.PresentedModule import PresentedModule
from multibgg.utils import Degree


@dataclass(frozen=True)
class DifferentialModule:
    """
    A presented module D with a square-zero endomorphism of degree a, given
    on generators by `differential` (source = target = D.generators, shift a).
    """
    underlying: PresentedModule
    differential: GradedMatrix

    def __post_init__(self):
        G = self.underlying.generators
        if self.differential.source != G or self.differential.target != G:
            raise ValueError("the differential must be an endomorphism of the generators")
        check_relations_preserved(self.differential, self.underlying.relations, self.underlying.relations)
        square = self.differential @ self.differential
        offenders = [c for c in square.columns() if c]
        if not offenders:
            return
        if self.is_free():
            raise NotSquareZero("the differential does not square to zero")
        basis = buchberger(self.underlying.relations.columns(), G)
        if any(not basis.contains(c) for c in offenders):
            raise NotSquareZero("the differential does not square to zero modulo the relations")

    @staticmethod
    def free(differential: GradedMatrix) -> "DifferentialModule":
        return DifferentialModule(PresentedModule.free(differential.target), differential)

    @staticmethod
    def zero(M: PresentedModule, a: Degree = None) -> "DifferentialModule":
        a = a if a is not None else M.ring.zero_degree()
        return DifferentialModule(M, GradedMatrix.zero(M.generators, M.generators, tuple(a)))

    @property
    def ring(self):
        return self.underlying.ring

    @property
    def degree(self) -> Degree:
        return self.differential.shift

    @property
    def generators(self) -> FreeModule:
        return self.underlying.generators

    @property
    def rank(self) -> int:
        return self.underlying.rank

    @property
    def relations(self) -> GradedMatrix:
        return self.underlying.relations

    def is_free(self) -> bool:
        return self.underlying.is_free()


def mk_differential_module(differential: GradedMatrix, underlying: Optional[PresentedModule] = None
                           ) -> DifferentialModule:
    if underlying is None:
        return DifferentialModule.free(differential)
    return DifferentialModule(underlying, differential)


@dataclass(frozen=True)
class FlagDM(DifferentialModule):
    """
    Free differential module with a decomposition into blocks F_0, F_1, ...
    such that the differential sends block i into blocks j < i.
    """
    flag: Tuple[Tuple[int, ...], ...] = ()
    labels: Optional[Tuple[int, ...]] = None
    """homological index of each block, when the flag came from a complex"""

    def __post_init__(self):
        super().__post_init__()
        if not self.is_free():
            raise NotAFlag("a free flag needs a free underlying module")
        covered = sorted(i for block in self.flag for i in block)
        if covered != list(range(self.rank)):
            raise NotAFlag("the flag blocks do not partition the generators")
        block_of = {i: b for b, block in enumerate(self.flag) for i in block}
        for i, row in enumerate(self.differential.entries):
            for j, f in enumerate(row):
                if f and block_of[i] >= block_of[j]:
                    raise NotAFlag(f"entry ({i}, {j}) maps block {block_of[j]} into block {block_of[i]}")

    def block(self, i: int) -> FreeModule:
        return self.generators.select(self.flag[i])

    @property
    def block_twists(self):
        return [self.block(i).twists for i in range(len(self.flag))]


@dataclass(frozen=True)
class DMorphism:
    """Degree-zero map of differential modules commuting with the differentials."""
    source: DifferentialModule
    target: DifferentialModule
    matrix: GradedMatrix

    def __post_init__(self):
        if self.matrix.source != self.source.generators or self.matrix.target != self.target.generators:
            raise ValueError("matrix does not run between the generators of source and target")
        if any(self.matrix.shift):
            raise NotAMorphism("a morphism of differential modules has degree zero")
        if self.source.degree != self.target.degree:
            raise NotAMorphism("source and target differentials have different degrees")
        try:
            check_relations_preserved(self.matrix, self.source.relations, self.target.relations)
        except RelationsNotPreserved as e:
            raise NotAMorphism(str(e)) from e
        defect = (self.target.differential @ self.matrix) - (self.matrix @ self.source.differential)
        offenders = [c for c in defect.columns() if c]
        if not offenders:
            return
        basis = buchberger(self.target.relations.columns(), self.target.generators)
        if any(not basis.contains(c) for c in offenders):
            raise NotAMorphism("the map does not commute with the differentials")

    @staticmethod
    def identity(D: DifferentialModule) -> "DMorphism":
        return DMorphism(D, D, GradedMatrix.identity(D.generators))

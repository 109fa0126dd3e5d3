from typing import List, Tuple

from multibgg.colorized_logger import get_logger
from multibgg.diffmod.DifferentialModule import DifferentialModule, DMorphism
from multibgg.groebner.presentation import subquotient
from multibgg.groebner.syzygies import kernel_generators
from multibgg.modules.GradedMatrix import GradedMatrix
from multibgg.modules.PresentedModule import PresentedModule
from multibgg.modules.operations import direct_sum, hconcat, twist
from multibgg.modules.vectors import SVec

logger = get_logger('multibgg.diffmod.homology')


def homology_with_cycles(D: DifferentialModule) -> Tuple[PresentedModule, List[SVec]]:
    """
    H(D) = ker(D -> D(a)) / im(D(-a) -> D), minimally presented, with one
    cycle of D (a vector in D.generators) per generator of H(D).
    """
    cycles = kernel_generators(D.differential, D.relations)
    boundaries = hconcat([D.differential.as_shift(D.ring.zero_degree()), D.relations])
    H, kept = subquotient(D.generators, cycles, boundaries)
    logger.debug("homology of a rank %d differential module: %d generators", D.rank, H.rank)
    return H, [cycles[k] for k in kept]


def homology_dm(D: DifferentialModule) -> PresentedModule:
    return homology_with_cycles(D)[0]


def cone_dm(f: DMorphism) -> DifferentialModule:
    """
    Underlying module target + source(a) with differential
    [[d_target, f], [0, -d_source]].
    """
    T, S = f.target, f.source
    a = T.degree
    shifted = S.generators.twisted(a)
    left = GradedMatrix(T.generators, T.generators + shifted, a,
                        T.differential.entries + tuple(tuple(T.ring.zero() for _ in range(T.rank))
                                                       for _ in range(S.rank)))
    right_entries = tuple(f.matrix.entries) + tuple(tuple(-p for p in row) for row in S.differential.entries)
    right = GradedMatrix(shifted, T.generators + shifted, a, right_entries)
    differential = hconcat([left, right])
    relations = direct_sum(T.relations, twist(S.relations, a))
    underlying = PresentedModule(T.generators + shifted, relations)
    return DifferentialModule(underlying, differential)


def is_minimal_dm(D: DifferentialModule) -> bool:
    return D.differential.is_minimal()

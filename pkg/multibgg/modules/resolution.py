from typing import Sequence

from multibgg.colorized_logger import get_logger
from multibgg.groebner.presentation import minimal_presentation, subquotient
from multibgg.groebner.syzygies import kernel_generators, syzygies
from multibgg.modules.FComplex import FComplex
from multibgg.modules.FreeModule import FreeModule
from multibgg.modules.PresentedModule import PresentedModule
from multibgg.utils import deg

logger = get_logger('multibgg.modules.resolution')


def minimal_free_resolution(M: PresentedModule, length_limit: int) -> FComplex:
    """F_0 <- F_1 <- ... <- F_k, k <= length_limit, by iterated minimal syzygies."""
    if length_limit < 0:
        raise ValueError("length limit must be non-negative")
    presentation = minimal_presentation(M)
    terms = {0: presentation.generators}
    differentials = {}
    d = presentation.relations
    k = 1
    while k <= length_limit and d.ncols:
        terms[k] = d.source
        differentials[k] = d
        d = syzygies(d)
        k += 1
    resolution = FComplex(M.ring, terms, differentials)
    logger.debug("minimal free resolution with ranks %s", resolution.ranks)
    return resolution


def complex_homology(C: FComplex, i: int) -> PresentedModule:
    """ker d_i / im d_(i+1), minimally presented."""
    cycles = kernel_generators(C.differential(i))
    return subquotient(C.term(i), cycles, C.differential(i + 1))[0]


def ext_module(M: PresentedModule, i: int, c: Sequence[int]) -> PresentedModule:
    """Ext^i(M, S(c)) from the dual of a minimal free resolution of M."""
    if i < 0:
        return PresentedModule.free(FreeModule(M.ring, ()))
    c = deg(c)
    F = minimal_free_resolution(M, i + 1)
    outgoing = F.differential(i + 1).transpose(c)
    incoming = F.differential(i).transpose(c)
    cycles = kernel_generators(outgoing)
    ext, _ = subquotient(F.term(i).dual(c), cycles, incoming)
    logger.debug("Ext^%d has %d minimal generators", i, ext.rank)
    return ext

"""
Free flag resolutions of differential modules. Both algorithms grow one
differential module C by repeated mapping cones: C_0 = D and
C_(k+1) = cone(F_k -> C_k), where F_k maps onto chosen cycles of C_k. The
generators of C_k are those of D followed by the blocks F_0(a), ..., F_(k-1)(a),
so the flag and its augmentation can be read off the cycles directly.
"""
from typing import List, Optional, Sequence

from multibgg.colorized_logger import get_logger
from multibgg.config import Config
from multibgg.diffmod.DifferentialModule import DifferentialModule, DMorphism, FlagDM
from multibgg.diffmod.FlagResolution import ConvergenceStatus, FlagResolution
from multibgg.diffmod.homology import cone_dm, homology_with_cycles
from multibgg.errors import NonzeroDegreeDifferential, UnsupportedGrading
from multibgg.groebner.presentation import is_zero_module
from multibgg.modules import vectors
from multibgg.modules.FreeModule import FreeModule
from multibgg.modules.GradedMatrix import GradedMatrix
from multibgg.modules.PresentedModule import PresentedModule
from multibgg.modules.vectors import SVec
from multibgg.utils import Degree

logger = get_logger('multibgg.diffmod.resolve')


class _ConeTower:
    """Bookkeeping for C_k = cone(F_(k-1) -> C_(k-1))."""

    def __init__(self, D: DifferentialModule):
        self.D = D
        self.current = D
        self.cycles: List[SVec] = []
        self.twists: List[Degree] = []
        self.flag: List[tuple] = []

    def attach(self, cycles: Sequence[SVec]) -> None:
        C = self.current
        ring = C.ring
        start = len(self.twists)
        degrees = [vectors.degree(ring, C.generators.twists, y) for y in cycles]
        self.flag.append(tuple(range(start, start + len(cycles))))
        if not cycles:
            return
        block = FreeModule(ring, tuple(degrees))
        source = DifferentialModule.zero(PresentedModule.free(block), C.degree)
        epsilon = DMorphism(source, C, GradedMatrix.from_columns(block, C.generators, cycles))
        self.current = cone_dm(epsilon)
        self.cycles.extend(cycles)
        self.twists.extend(degrees)

    def resolution(self, status: ConvergenceStatus) -> FlagResolution:
        D = self.D
        ring = D.ring
        r = D.rank
        F = FreeModule(ring, tuple(self.twists))
        columns = [vectors.restrict(y, r, r + F.rank) for y in self.cycles]
        differential = GradedMatrix.from_columns(F, F, columns, D.degree).scale(-1)
        flag = FlagDM(PresentedModule.free(F), differential, tuple(self.flag))
        augmentation = GradedMatrix.from_columns(F, D.generators, [vectors.restrict(y, 0, r) for y in self.cycles])
        return FlagResolution(flag, DMorphism(flag, D, augmentation), status, len(self.flag))


def res_dm(D: DifferentialModule, max_iter: Optional[int] = None) -> FlagResolution:
    """
    Free flag resolution F -> D: at every step the minimal generators of
    H(C) are lifted to cycles and coned off, until H(C) vanishes or the
    iteration budget runs out.
    """
    if max_iter is None:
        max_iter = Config.default_max_iter or D.ring.nvars + 1
    tower = _ConeTower(D)
    for step in range(max_iter):
        H, cycles = homology_with_cycles(tower.current)
        if H.rank == 0:
            logger.info("resDM converged after %d iterations", step)
            return tower.resolution(ConvergenceStatus.COMPLETE)
        logger.debug("resDM step %d: homology generated in degrees %s", step, H.generators.twists)
        tower.attach(cycles)
    status = ConvergenceStatus.COMPLETE if is_zero_module(homology_with_cycles(tower.current)[0]) \
        else ConvergenceStatus.TRUNCATED
    if status is ConvergenceStatus.TRUNCATED:
        logger.warning("resDM stopped after %d iterations with nonzero homology", max_iter)
    return tower.resolution(status)


def res_min_flag(D: DifferentialModule, t: int) -> FlagResolution:
    """
    Minimal free flag resolution of a degree-zero differential module over a
    positively Z-graded ring. Block i is generated in degree n + i, where n
    is the lowest degree of a minimal generator of H(D).
    """
    ring = D.ring
    if ring.rank != 1 or any(d[0] <= 0 for d in ring.var_degrees):
        raise UnsupportedGrading("resMinFlag needs a Z-grading with positive variable degrees")
    if any(D.degree):
        raise NonzeroDegreeDifferential(f"resMinFlag needs a degree 0 differential, got {D.degree}")

    tower = _ConeTower(D)
    H, cycles = homology_with_cycles(D)
    if H.rank == 0:
        return tower.resolution(ConvergenceStatus.COMPLETE)
    n = min(d[0] for d in H.generators.twists)
    for i in range(t):
        if i:
            H, cycles = homology_with_cycles(tower.current)
        chosen = [y for y, d in zip(cycles, H.generators.twists) if d[0] == n + i]
        logger.debug("resMinFlag step %d: %d cycles in degree %d", i, len(chosen), n + i)
        tower.attach(chosen)
    done = is_zero_module(homology_with_cycles(tower.current)[0])
    status = ConvergenceStatus.COMPLETE if done else ConvergenceStatus.TRUNCATED
    logger.info("resMinFlag: %d blocks, %s", t, status.value)
    return tower.resolution(status)

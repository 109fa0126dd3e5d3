"""
The BGG functors between S-modules and E-modules:
  toric_ll: E-module N with trivial differential -> complex of free S-modules,
            L(N)_j = sum over a of S(-a) (x) N_(a; j), differential sum_i x_i (x) e_i.
  toric_rr: S-module M -> free differential E-module on the pieces
            M_d (x) omega_E(-d; 0), differential sum_i x_i (x) e_i.
"""
from typing import Dict, List, Optional, Sequence

from multibgg.bgg.DifferentialEModule import DifferentialEModule
from multibgg.bgg.EModule import EModuleGraded
from multibgg.colorized_logger import get_logger
from multibgg.core.ExtAlgebra import ExtAlgebra, dual_ring_toric
from multibgg.errors import NotSquareZero
from multibgg.groebner.presentation import minimal_presentation
from multibgg.modules.FComplex import FComplex
from multibgg.modules.FreeModule import FreeModule
from multibgg.modules.GradedMatrix import GradedMatrix
from multibgg.modules.PresentedModule import PresentedModule
from multibgg.modules.pieces import finite_length_degrees, graded_piece_basis, multiplication_map
from multibgg.utils import Degree, deg, deg_add, format_degree

logger = get_logger('multibgg.bgg.functors')


def omega_twist_degree(E: ExtAlgebra, a: Sequence[int]) -> Degree:
    """Generator degree of M_a (x) omega_E(-a; 0): (a + sum_i deg x_i; n + 1)."""
    return deg_add(deg(a), E.symmetric_degree_sum) + (E.nvars,)


def default_degree_window(M: PresentedModule) -> List[Degree]:
    """All e + c*deg(x_i) with e a minimal generator degree of M and c in {0, 1}, sorted."""
    ring = M.ring
    window = set()
    for e in set(minimal_presentation(M).generators.twists):
        window.add(e)
        for d in ring.var_degrees:
            window.add(deg_add(e, d))
    return sorted(window)


def toric_rr(M: PresentedModule, L: Optional[Sequence[Sequence[int]]] = None) -> DifferentialEModule:
    """
    R(M), or its quotient on the pieces d in L. Without L a finite length
    module is taken in its entirety, anything else on the default window.
    Maps landing outside the window are dropped.
    """
    S = M.ring
    E = dual_ring_toric(S)
    user_window = L is not None
    if L is None:
        L = finite_length_degrees(M)
        if L is None:
            L = default_degree_window(M)
    window: List[Degree] = []
    for d in L:
        d = deg(d)
        if d not in window:
            window.append(d)

    offsets: Dict[Degree, int] = {}
    twists, sources = [], []
    for d in window:
        dim = graded_piece_basis(M, d).dim
        offsets[d] = len(twists)
        twists.extend([omega_twist_degree(E, d)] * dim)
        sources.extend([d] * dim)

    n = len(twists)
    rows = [[E.zero() for _ in range(n)] for _ in range(n)]
    for d in window:
        for i, xd in enumerate(S.var_degrees):
            target = deg_add(d, xd)
            if target not in offsets:
                continue
            A = multiplication_map(M, d, i)
            e_i = E.var(i)
            for p in range(A.shape[0]):
                for q in range(A.shape[1]):
                    if A[p, q] != 0:
                        r, c = offsets[target] + p, offsets[d] + q
                        rows[r][c] = rows[r][c] + e_i * A[p, q]
    logger.debug("toricRR on %d degrees: rank %d", len(window), n)
    try:
        return DifferentialEModule(E, tuple(twists), tuple(tuple(r) for r in rows), tuple(sources))
    except NotSquareZero:
        if user_window:
            raise NotSquareZero("the quotient of R(M) on the window "
                                f"[{', '.join(format_degree(d) for d in window)}] is not a differential module")
        raise


def toric_ll(N: EModuleGraded) -> FComplex:
    """
    L(N) for an E-module with trivial differential. Homological index j is
    the last coordinate of the E-degree; the generators of L(N)_j are ordered
    by degree, then by the basis of the piece.
    """
    E = N.ring
    S = dual_ring_toric(E)
    by_index: Dict[int, List[Degree]] = {}
    for delta in N.support:
        by_index.setdefault(delta[-1], []).append(delta)

    terms, offsets = {}, {}
    for j, deltas in by_index.items():
        twists = []
        for delta in deltas:
            offsets[delta] = len(twists)
            twists.extend([delta[:-1]] * N.dim(delta))
        terms[j] = FreeModule(S, tuple(twists))

    differentials = {}
    for j, deltas in by_index.items():
        if j - 1 not in terms:
            continue
        source, target = terms[j], terms[j - 1]
        rows = [[S.zero() for _ in range(source.rank)] for _ in range(target.rank)]
        for delta in deltas:
            for i in range(E.nvars):
                A = N.action(i, delta)
                if not A.size:
                    continue
                moved = deg_add(delta, E.var_degrees[i])
                x_i = S.var(i)
                for p in range(A.shape[0]):
                    for q in range(A.shape[1]):
                        if A[p, q] != 0:
                            r, c = offsets[moved] + p, offsets[delta] + q
                            rows[r][c] = rows[r][c] + x_i.scale(A[p, q])
        differentials[j] = GradedMatrix.of(source, target, rows)
    complex_ = FComplex(S, terms, differentials)
    logger.debug("toricLL: ranks %s", complex_.ranks)
    return complex_

"""
Graded pieces M_d of a presented module as finite-dimensional vector spaces,
and the maps x_i : M_d -> M_(d + deg x_i) between them.
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional

import numpy as np

from multibgg.colorized_logger import get_logger
from multibgg.core.linalg import QuotientSpace, zeros
from multibgg.groebner.GroebnerBasis import buchberger
from multibgg.modules.PresentedModule import PresentedModule
from multibgg.modules.vectors import SVec, Term
from multibgg.utils import Degree, deg, deg_add, deg_sub, exp_add, exp_divides

logger = get_logger('multibgg.modules.pieces')


@dataclass(frozen=True, eq=False)
class PieceBasis:
    """
    k-basis of M_d. Ambient keys are (generator, exponent) pairs, i.e. the
    terms of the free module in degree d; the basis is the set of keys left
    over by the reduced echelon form of the relations.
    """
    module: PresentedModule
    degree: Degree
    space: QuotientSpace

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def basis(self) -> List[Term]:
        return self.space.basis_keys

    def coordinates(self, v: SVec) -> np.ndarray:
        return self.space.coordinates(v)

    def lift(self, coords) -> SVec:
        return self.space.lift(coords)


def graded_piece_basis(M: PresentedModule, d) -> PieceBasis:
    return _piece(M, deg(d))


@lru_cache(maxsize=2048)
def _piece(M: PresentedModule, d: Degree) -> PieceBasis:
    ring = M.ring
    keys = [(i, e) for i, t in enumerate(M.generators.twists) for e in ring.monomials_of_degree(deg_sub(d, t))]
    relations = []
    for j, s in enumerate(M.relations.source.twists):
        column = M.relations.column(j)
        if not column:
            continue
        for m in ring.monomials_of_degree(deg_sub(d, s)):
            relations.append({(p, exp_add(e, m)): c for (p, e), c in column.items()})
    return PieceBasis(M, d, QuotientSpace(ring.field, keys, relations))


def piece_dimension(M: PresentedModule, d) -> int:
    return graded_piece_basis(M, d).dim


def multiplication_map(M: PresentedModule, d, i: int) -> np.ndarray:
    """Matrix of x_i : M_d -> M_(d + deg x_i), columns indexed by the basis of M_d."""
    ring = M.ring
    F = ring.field
    source = graded_piece_basis(M, d)
    target = graded_piece_basis(M, deg_add(deg(d), ring.var_degrees[i]))
    A = zeros(F, target.dim, source.dim)
    step = tuple(1 if k == i else 0 for k in range(ring.nvars))
    for col, (p, e) in enumerate(source.basis):
        A[:, col] = target.coordinates({(p, exp_add(e, step)): F.one})
    return A


def finite_length_degrees(M: PresentedModule) -> Optional[List[Degree]]:
    """
    Sorted degrees d with M_d != 0 when M has finite length, else None.
    Finite length means every surviving generator position has a pure power
    of every variable among the leading terms of its relations.
    """
    ring = M.ring
    n = ring.nvars
    G = buchberger(M.relations.columns(), M.generators)
    by_position: Dict[int, list] = {}
    for p, e in G.leads:
        by_position.setdefault(p, []).append(e)

    degrees = set()
    for i, t in enumerate(M.generators.twists):
        leads = by_position.get(i, [])
        if any(not any(e) for e in leads):
            continue
        for j in range(n):
            if not any(e[j] > 0 and sum(e) == e[j] for e in leads):
                return None
        frontier = [(0,) * n]
        seen = set(frontier)
        while frontier:
            e = frontier.pop()
            if any(exp_divides(lead, e) for lead in leads):
                continue
            degrees.add(deg_add(t, ring.degree_of(e)))
            for j in range(n):
                up = e[:j] + (e[j] + 1,) + e[j + 1:]
                if up not in seen:
                    seen.add(up)
                    frontier.append(up)
    logger.debug("finite length module supported in %d degrees", len(degrees))
    return sorted(degrees)

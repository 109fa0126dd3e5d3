from itertools import combinations
from typing import List, Sequence

from multibgg.core.PolyRing import PolyRing
from multibgg.core.Polynomial import Polynomial
from multibgg.modules import vectors
from multibgg.modules.FreeModule import FreeModule
from multibgg.modules.PresentedModule import PresentedModule


def cokernel(ring: PolyRing, rows: Sequence[Sequence[Polynomial]], twists=None) -> PresentedModule:
    """coker of the matrix `rows`; target twists default to zero, source twists are read off the columns."""
    target = FreeModule.of(ring, twists) if twists is not None else FreeModule.free(ring, len(rows))
    ncols = len(rows[0]) if rows else 0
    columns = [vectors.from_polynomials([row[j] for row in rows]) for j in range(ncols)]
    return PresentedModule.from_columns(target, columns)


def quotient_ring(ring: PolyRing, polys: Sequence[Polynomial]) -> PresentedModule:
    """S / (polys) as a cyclic module."""
    return cokernel(ring, [list(polys)])


def residue_field(ring: PolyRing) -> PresentedModule:
    return quotient_ring(ring, ring.gens)


def free_module(ring: PolyRing, twists) -> PresentedModule:
    return PresentedModule.free(FreeModule.of(ring, twists))


def determinant(rows: Sequence[Sequence[Polynomial]]) -> Polynomial:
    if len(rows) == 1:
        return rows[0][0]
    total = rows[0][0].ring.zero()
    for j, a in enumerate(rows[0]):
        if a.is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in rows[1:]]
        term = a * determinant(minor)
        total = total - term if j % 2 else total + term
    return total


def minors(size: int, rows: Sequence[Sequence[Polynomial]]) -> List[Polynomial]:
    """Nonzero size x size minors, rows and columns taken in lexicographic order, duplicates dropped."""
    rows = [list(r) for r in rows]
    ncols = len(rows[0]) if rows else 0
    out = []
    for rs in combinations(range(len(rows)), size):
        for cs in combinations(range(ncols), size):
            m = determinant([[rows[r][c] for c in cs] for r in rs])
            if m and m not in out:
                out.append(m)
    return out


def minors_quotient(ring: PolyRing, size: int, rows: Sequence[Sequence[Polynomial]]) -> PresentedModule:
    """S / I_size(rows)."""
    return quotient_ring(ring, minors(size, rows))

"""
Subquotients and minimal presentations. Every homology computation in the
package ends here: kernel generators over image generators, pruned of unit
entries and redundant relations.
"""
from typing import List, Optional, Sequence, Tuple

from multibgg.colorized_logger import get_logger
from multibgg.groebner.GroebnerBasis import buchberger, minimal_generators
from multibgg.groebner.syzygies import check_relations_preserved, kernel_generators, syzygies
from multibgg.modules import vectors
from multibgg.modules.FreeModule import FreeModule
from multibgg.modules.GradedMatrix import GradedMatrix
from multibgg.modules.PresentedModule import PresentedModule
from multibgg.modules.operations import hconcat
from multibgg.modules.vectors import SVec

logger = get_logger('multibgg.groebner.presentation')


def prune(generators: FreeModule, columns: Sequence[SVec]) -> Tuple[PresentedModule, List[int]]:
    """
    Minimal presentation of coker(columns) together with the indices of the
    generators that survive. Unit entries are eliminated one at a time
    (generator and relation go together), then redundant relations dropped.
    """
    ring = generators.ring
    F = ring.field
    one = (0,) * ring.nvars
    columns = [dict(c) for c in columns if c]
    alive = list(range(generators.rank))

    while True:
        hit = _find_unit(columns, one)
        if hit is None:
            break
        c, i = hit
        pivot = columns.pop(c)
        u = pivot[(i, one)]
        for col in columns:
            row_part = {e: a for (p, e), a in col.items() if p == i}
            for e, a in row_part.items():
                vectors.add_scaled(F, col, pivot, F.neg(F.div(a, u)), e)
        columns = [col for col in columns if col]
        alive.remove(i)

    renumber = {old: new for new, old in enumerate(alive)}
    kept_generators = generators.select(alive)
    columns = [{(renumber[p], e): a for (p, e), a in col.items()} for col in columns]
    if columns:
        columns = [columns[k] for k in minimal_generators(columns, kept_generators)]
    logger.debug("pruned %d generators down to %d with %d relations", generators.rank, len(alive), len(columns))
    return PresentedModule.from_columns(kept_generators, columns), alive


def _find_unit(columns: List[SVec], one) -> Optional[Tuple[int, int]]:
    for c, col in enumerate(columns):
        rows = [p for (p, e) in col if e == one]
        if rows:
            return c, min(rows)
    return None


def minimal_presentation(M: PresentedModule) -> PresentedModule:
    return prune(M.generators, M.relations.columns())[0]


def subquotient(ambient: FreeModule, gens: Sequence[SVec],
                relations: Optional[GradedMatrix] = None) -> Tuple[PresentedModule, List[int]]:
    """
    (<gens> + im relations) / im relations, minimally presented. Returns the
    module and the indices into `gens` of the vectors chosen as its generators.
    """
    nonzero = [k for k, g in enumerate(gens) if g]
    if not nonzero:
        return PresentedModule.free(FreeModule(ambient.ring, ())), []
    K = GradedMatrix.with_columns(ambient, [gens[k] for k in nonzero])
    blocks = [K]
    if relations is not None and relations.ncols:
        blocks.append(relations)
    syz = syzygies(hconcat(blocks))
    rel_columns = [vectors.restrict(c, 0, K.ncols) for c in syz.columns()]
    module, kept = prune(K.source, rel_columns)
    return module, [nonzero[k] for k in kept]


def kernel_of_presented_map(phi: GradedMatrix, source: PresentedModule,
                            target: PresentedModule) -> PresentedModule:
    """
    ker(source -> target) for a map given on generators. The generators of
    the result are elements of source.generators (see kernel_presentation).
    """
    return kernel_presentation(phi, source, target)[0]


def kernel_presentation(phi: GradedMatrix, source: PresentedModule,
                        target: PresentedModule) -> Tuple[PresentedModule, List[SVec]]:
    if phi.source != source.generators or phi.target != target.generators:
        raise ValueError("map does not run between the generators of the given modules")
    check_relations_preserved(phi, source.relations, target.relations)
    gens = kernel_generators(phi, target.relations)
    module, kept = subquotient(source.generators, gens, source.relations)
    return module, [gens[k] for k in kept]


def is_zero_module(M: PresentedModule) -> bool:
    if M.rank == 0:
        return True
    G = buchberger(M.relations.columns(), M.generators)
    one = (0,) * M.ring.nvars
    F = M.ring.field
    return all(G.contains({(i, one): F.one}) for i in range(M.rank))

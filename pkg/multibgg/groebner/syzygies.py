from typing import List, Optional

from multibgg.colorized_logger import get_logger
from multibgg.errors import RelationsNotPreserved
from multibgg.groebner.GroebnerBasis import buchberger, minimal_generators
from multibgg.modules import vectors
from multibgg.modules.FreeModule import FreeModule
from multibgg.modules.GradedMatrix import GradedMatrix
from multibgg.modules.operations import hconcat
from multibgg.modules.vectors import SVec
from multibgg.utils import deg_add

logger = get_logger('multibgg.groebner.syzygies')


def syzygies(phi: GradedMatrix) -> GradedMatrix:
    """
    Minimal generators of ker(phi) as the columns of a degree-zero map into
    phi.source. Each column c_j is tagged with a unit vector in an extra
    block of positions ranked below the target, so the basis elements whose
    leading term falls in the tag block carry exactly the syzygies.
    """
    ring = phi.ring
    F = ring.field
    r, m = phi.nrows, phi.ncols
    empty = FreeModule(ring, ())
    if m == 0:
        return GradedMatrix.zero(empty, phi.source)

    tags = tuple(deg_add(s, phi.shift) for s in phi.source.twists)
    augmented = FreeModule(ring, phi.target.twists + tags)
    one = (0,) * ring.nvars
    gens = []
    for j, col in enumerate(phi.columns()):
        v = dict(col)
        v[(r + j, one)] = F.one
        gens.append(v)
    G = buchberger(gens, augmented)

    found = [vectors.restrict(g, r, r + m) for g, (pos, _) in zip(G.elements, G.leads) if pos >= r]
    keep = minimal_generators(found, phi.source)
    logger.debug("syzygies of a %d x %d map: %d minimal of %d", r, m, len(keep), len(found))
    if not keep:
        return GradedMatrix.zero(empty, phi.source)
    return GradedMatrix.with_columns(phi.source, [found[k] for k in keep])


def check_relations_preserved(phi: GradedMatrix, source_relations: GradedMatrix,
                              target_relations: Optional[GradedMatrix]) -> None:
    """phi(im source_relations) must lie in im target_relations."""
    columns = [phi.apply(c) for c in source_relations.columns()]
    columns = [c for c in columns if c]
    if not columns:
        return
    if target_relations is None or target_relations.ncols == 0:
        raise RelationsNotPreserved("the map sends a relation to a nonzero element of a free module")
    G = buchberger(target_relations.columns(), phi.target)
    for k, c in enumerate(columns):
        if not G.contains(c):
            raise RelationsNotPreserved(f"relation {k} is not mapped into the target relations")


def kernel_generators(phi: GradedMatrix, target_relations: Optional[GradedMatrix] = None) -> List[SVec]:
    """
    Generators, as vectors of phi.source, of {v : phi(v) in im target_relations}:
    the syzygies of [phi | target_relations] cut down to the phi block.
    """
    blocks = [phi]
    if target_relations is not None and target_relations.ncols:
        blocks.append(target_relations)
    syz = syzygies(hconcat(blocks))
    out = [vectors.restrict(c, 0, phi.ncols) for c in syz.columns()]
    return [v for v in out if v]

from multibgg.diffmod.DifferentialModule import FlagDM
from multibgg.modules.FComplex import FComplex
from multibgg.modules.FreeModule import FreeModule
from multibgg.modules.GradedMatrix import GradedMatrix
from multibgg.modules.PresentedModule import PresentedModule
from multibgg.utils import Degree, deg, deg_add, deg_scale, deg_sub


def fold_complex(C: FComplex, a) -> FlagDM:
    """
    The complex as a differential module of degree a: the sum of the C_i(i*a),
    blocks ordered by increasing homological index, d_i placed in block
    (i-1, i).
    """
    ring = C.ring
    a = deg(a)
    indices = C.indices
    twists, flag, offsets = [], [], {}
    for i in indices:
        offsets[i] = len(twists)
        block = [deg_sub(t, deg_scale(i, a)) for t in C.term(i).twists]
        flag.append(tuple(range(len(twists), len(twists) + len(block))))
        twists.extend(block)
    F = FreeModule(ring, tuple(twists))
    rows = [[ring.zero() for _ in twists] for _ in twists]
    for i in indices:
        if i - 1 not in offsets:
            continue
        d = C.differential(i)
        for r, row in enumerate(d.entries):
            for c, f in enumerate(row):
                rows[offsets[i - 1] + r][offsets[i] + c] = f
    differential = GradedMatrix.of(F, F, rows, a)
    return FlagDM(PresentedModule.free(F), differential, tuple(flag), tuple(indices))


def unfold_flag(F: FlagDM) -> FComplex:
    """Inverse of fold_complex, for flags whose differential only drops one block."""
    ring = F.ring
    a = F.degree
    labels = F.labels if F.labels is not None else tuple(range(len(F.flag)))
    terms, differentials = {}, {}
    for b, block in enumerate(F.flag):
        i = labels[b]
        terms[i] = FreeModule(ring, tuple(deg_add(F.generators.twists[g], deg_scale(i, a)) for g in block))
    for b, block in enumerate(F.flag):
        for b2, block2 in enumerate(F.flag):
            entries = [[F.differential.entries[r][c] for c in block] for r in block2]
            nonzero = any(f for row in entries for f in row)
            if nonzero and labels[b2] != labels[b] - 1:
                raise ValueError(f"block {b} maps into block {b2}, which is not one step down")
            if labels[b2] == labels[b] - 1 and block and block2:
                i = labels[b]
                differentials[i] = GradedMatrix.of(terms[i], terms[i - 1], entries)
    return FComplex(ring, terms, differentials)


def block_degree(F: FlagDM, b: int) -> Degree:
    """Common twist of a block generated in a single degree."""
    twists = set(F.block(b).twists)
    if len(twists) != 1:
        raise ValueError(f"block {b} is not generated in a single degree")
    return twists.pop()

from functools import singledispatch
from typing import Sequence

from multibgg.errors import RingMismatch
from multibgg.modules.FreeModule import FreeModule
from multibgg.modules.GradedMatrix import GradedMatrix
from multibgg.modules.PresentedModule import PresentedModule
from multibgg.utils import Degree


@singledispatch
def twist(obj, b: Degree):
    """obj(b): generator degrees move by -b, matrices keep their entries."""
    raise TypeError(f"cannot twist a {type(obj).__name__}")


@twist.register
def _(F: FreeModule, b: Degree) -> FreeModule:
    return F.twisted(b)


@twist.register
def _(phi: GradedMatrix, b: Degree) -> GradedMatrix:
    return GradedMatrix(phi.source.twisted(b), phi.target.twisted(b), phi.shift, phi.entries)


@twist.register
def _(M: PresentedModule, b: Degree) -> PresentedModule:
    return PresentedModule(M.generators.twisted(b), twist(M.relations, b))


def compose_maps(*maps: GradedMatrix) -> GradedMatrix:
    """compose_maps(f, g, h) = f . g . h"""
    result = maps[-1]
    for f in reversed(maps[:-1]):
        result = f @ result
    return result


def direct_sum(*maps: GradedMatrix) -> GradedMatrix:
    """Block diagonal sum; all summands must share one shift."""
    if not maps:
        raise ValueError("direct_sum needs at least one map")
    ring, shift = maps[0].ring, maps[0].shift
    if any(m.ring != ring for m in maps):
        raise RingMismatch("direct sum of maps over different rings")
    if any(m.shift != shift for m in maps):
        raise ValueError("direct sum of maps with different shifts")
    source = FreeModule(ring, sum((m.source.twists for m in maps), ()))
    target = FreeModule(ring, sum((m.target.twists for m in maps), ()))
    rows = []
    col_offset = 0
    offsets = []
    for m in maps:
        offsets.append(col_offset)
        col_offset += m.ncols
    for k, m in enumerate(maps):
        for row in m.entries:
            full = [ring.zero()] * source.rank
            full[offsets[k]:offsets[k] + m.ncols] = row
            rows.append(tuple(full))
    return GradedMatrix(source, target, shift, tuple(rows))


def direct_sum_modules(*modules: PresentedModule) -> PresentedModule:
    return PresentedModule(sum((M.generators for M in modules[1:]), modules[0].generators),
                           direct_sum(*(M.relations for M in modules)))


def hconcat(maps: Sequence[GradedMatrix]) -> GradedMatrix:
    """[A | B | ...] into a common target; every block is read at the first block's shift."""
    first = maps[0]
    blocks = [first] + [m.as_shift(first.shift) for m in maps[1:]]
    if any(m.target != first.target for m in blocks):
        raise ValueError("hconcat of maps with different targets")
    source = FreeModule(first.ring, sum((m.source.twists for m in blocks), ()))
    rows = tuple(sum((m.entries[i] for m in blocks), ()) for i in range(first.nrows))
    return GradedMatrix(source, first.target, first.shift, rows)


def vconcat(maps: Sequence[GradedMatrix]) -> GradedMatrix:
    """Blocks stacked on top of each other, sharing source and shift."""
    first = maps[0]
    if any(m.source != first.source or m.shift != first.shift for m in maps):
        raise ValueError("vconcat of maps with different sources")
    target = FreeModule(first.ring, sum((m.target.twists for m in maps), ()))
    return GradedMatrix(first.source, target, first.shift, sum((m.entries for m in maps), ()))

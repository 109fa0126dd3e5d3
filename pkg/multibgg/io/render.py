"""
Transcript-style text: every matrix row is labelled with its degree in braces
and the entries sit between pipes,

    {1, 0}  | x_0 x_1^2 |
    {-2, 1} | 0   x_3   |
"""
from functools import singledispatch
from typing import Sequence

from multibgg.bgg.DifferentialEModule import DifferentialEModule
from multibgg.bgg.EModule import EModuleGraded
from multibgg.diffmod.DifferentialModule import DifferentialModule, DMorphism, FlagDM
from multibgg.diffmod.FlagResolution import FlagResolution
from multibgg.modules.FComplex import FComplex
from multibgg.modules.FreeModule import FreeModule
from multibgg.modules.GradedMatrix import GradedMatrix
from multibgg.modules.PresentedModule import PresentedModule
from multibgg.strands.strand import StrandResult
from multibgg.utils import Degree, format_degree


def render_table(labels: Sequence[Degree], cells: Sequence[Sequence[str]]) -> str:
    if not labels:
        return "0"
    names = [format_degree(d) for d in labels]
    label_width = max(len(n) for n in names)
    ncols = len(cells[0]) if cells else 0
    widths = [max(len(row[j]) for row in cells) for j in range(ncols)]
    lines = []
    for name, row in zip(names, cells):
        body = " ".join(c.ljust(w) for c, w in zip(row, widths))
        lines.append(f"{name.ljust(label_width)} | {body} |" if body else f"{name.ljust(label_width)} | |")
    return "\n".join(lines)


def render_matrix(phi: GradedMatrix) -> str:
    return render_table(phi.target.twists, [[f.render() for f in row] for row in phi.entries])


def render_free(F: FreeModule) -> str:
    if not F.rank:
        return "0"
    return f"S^{F.rank} {{{', '.join(format_degree(t) for t in F.twists)}}}"


def render_complex(C: FComplex) -> str:
    indices = C.indices
    if not indices:
        return "0"
    lines = ["ranks: " + "  ".join(f"{i}: {C.term(i).rank}" for i in indices)]
    for i in indices:
        lines.append(f"C_{i} = {render_free(C.term(i))}")
    for i in range(indices[0] + 1, indices[-1] + 1):
        d = C.differential(i)
        if not d.nrows or not d.ncols:
            continue
        lines.append(f"d_{i}: C_{i} -> C_{i - 1}")
        lines.append(render_matrix(d))
    return "\n".join(lines)


def render_presented(M: PresentedModule) -> str:
    lines = [f"generators: {render_free(M.generators)}"]
    if M.relations.ncols:
        lines.append("relations:")
        lines.append(render_matrix(M.relations))
    return "\n".join(lines)


def render_dm(D: DifferentialModule) -> str:
    lines = [f"differential module of degree {format_degree(D.degree)}, rank {D.rank}"]
    if isinstance(D, FlagDM):
        for b, twists in enumerate(D.block_twists):
            label = D.labels[b] if D.labels is not None else b
            lines.append(f"F_{label}: {{{', '.join(format_degree(t) for t in twists)}}}")
    lines.append(render_matrix(D.differential))
    if not D.is_free():
        lines.append("relations:")
        lines.append(render_matrix(D.relations))
    return "\n".join(lines)


def render_e_module(N: DifferentialEModule) -> str:
    lines = [f"differential E-module, rank {N.rank}"]
    lines.append(render_table(N.twists, [[str(f) for f in row] for row in N.entries]))
    return "\n".join(lines)


def render_e_pieces(N: EModuleGraded) -> str:
    lines = [f"graded E-module, total dimension {N.total_dim}"]
    for d in N.support:
        lines.append(f"{format_degree(d)}: {N.dim(d)}")
    return "\n".join(lines)


def render_flag_resolution(res: FlagResolution) -> str:
    lines = [render_dm(res.flag), f"status: {res.status.value} after {res.iterations} iterations",
             "augmentation:", render_matrix(res.augmentation.matrix)]
    return "\n".join(lines)


def render_strand(result: StrandResult) -> str:
    lines = [f"strand generated in degree {format_degree(result.source_degree)}",
             render_complex(result.strand)]
    return "\n".join(lines)


@singledispatch
def render(obj) -> str:
    return str(obj)


render.register(GradedMatrix, render_matrix)
render.register(FreeModule, render_free)
render.register(FComplex, render_complex)
render.register(PresentedModule, render_presented)
render.register(DifferentialModule, render_dm)
render.register(DifferentialEModule, render_e_module)
render.register(EModuleGraded, render_e_pieces)
render.register(FlagResolution, render_flag_resolution)
render.register(StrandResult, render_strand)


@render.register
def _(f: DMorphism) -> str:
    return render_matrix(f.matrix)

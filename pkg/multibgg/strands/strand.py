"""
Strongly linear strand of the minimal free resolution of a module generated
in a single degree d, computed as L(K) where K is the kernel of the
differential of R(M) restricted to M_d (x) omega_E(-d; 0).

The summand M_d (x) omega_E(-d; 0) is free over E on the basis v of M_d; its
elements are sums of g_v * e_I. The differential sends g_v * e_I to
sum_i g_(x_i v) * e_i * e_I in the summands of degree d + deg x_i, so both
the kernel and its e_i-actions can be computed one E-degree at a time.
"""
from dataclasses import dataclass
from typing import Dict, List

import numpy as np

from multibgg.bgg.EModule import EModuleGraded
from multibgg.bgg.functors import omega_twist_degree, toric_ll
from multibgg.colorized_logger import get_logger
from multibgg.core.ExtAlgebra import dual_ring_toric, merge_sign
from multibgg.core.linalg import coordinates_in_span, nullspace, zero_vector, zeros
from multibgg.errors import NotInKernel, NotSingleDegree
from multibgg.groebner.presentation import minimal_presentation
from multibgg.modules.FComplex import FComplex
from multibgg.modules.GradedMatrix import GradedMatrix
from multibgg.modules.PresentedModule import PresentedModule
from multibgg.modules.pieces import graded_piece_basis, multiplication_map
from multibgg.utils import Degree, deg_add, format_degree

logger = get_logger('multibgg.strands.strand')


@dataclass(frozen=True, eq=False)
class StrandResult:
    strand: FComplex
    source_degree: Degree
    kernel_dims: Dict[Degree, int]


def strongly_linear_strand(M: PresentedModule) -> StrandResult:
    S = M.ring
    F = S.field
    E = dual_ring_toric(S)
    presentation = minimal_presentation(M)
    generator_degrees = set(presentation.generators.twists)
    if len(generator_degrees) != 1:
        raise NotSingleDegree("the strand needs a module generated in a single degree, got "
                              f"{sorted(generator_degrees) or 'the zero module'}")
    d = generator_degrees.pop()
    beta = graded_piece_basis(presentation, d).dim
    top = omega_twist_degree(E, d)

    # source keys (v, I) grouped by the E-degree of g_v * e_I
    keys_by_degree: Dict[Degree, List[tuple]] = {}
    for word in E.all_words():
        delta = deg_add(top, E.degree_of(word))
        keys_by_degree.setdefault(delta, []).extend((v, word) for v in range(beta))

    multiplications = [multiplication_map(presentation, d, i) for i in range(S.nvars)]

    kernels: Dict[Degree, List[np.ndarray]] = {}
    for delta, keys in keys_by_degree.items():
        images = []
        index = {}
        for v, word in keys:
            image = {}
            for i in range(S.nvars):
                sign = merge_sign((i,), word)
                if sign == 0:
                    continue
                A = multiplications[i]
                target = (deg_add(d, S.var_degrees[i]), tuple(sorted((i,) + word)))
                for p in range(A.shape[0]):
                    if A[p, v] != 0:
                        key = target + (p,)
                        index.setdefault(key, len(index))
                        c = A[p, v] if sign > 0 else F.neg(A[p, v])
                        image[key] = F.add(image.get(key, 0), c)
            images.append(image)
        D = zeros(F, len(index), len(keys))
        for col, image in enumerate(images):
            for key, c in image.items():
                D[index[key], col] = c
        basis = nullspace(F, D) if index else [_unit(F, len(keys), k) for k in range(len(keys))]
        if basis:
            kernels[delta] = basis

    actions = {}
    for delta, basis in kernels.items():
        keys = keys_by_degree[delta]
        for i in range(E.nvars):
            target = deg_add(delta, E.var_degrees[i])
            if target not in keys_by_degree:
                continue
            position = {key: k for k, key in enumerate(keys_by_degree[target])}
            images = [_right_multiply(F, keys, vec, i, position) for vec in basis]
            if target not in kernels:
                if any(np.any(w != 0) for w in images):
                    raise NotInKernel(f"e_{i} moves the kernel out of itself at {format_degree(delta)}")
                continue
            A = zeros(F, len(kernels[target]), len(basis))
            for col, moved in enumerate(images):
                coords = coordinates_in_span(F, kernels[target], moved)
                if coords is None:
                    raise NotInKernel(f"e_{i} moves the kernel out of itself at {format_degree(delta)}")
                A[:, col] = coords
            if np.any(A != 0):
                actions[(i, delta)] = A

    kernel_dims = {delta: len(basis) for delta, basis in kernels.items()}
    K = EModuleGraded(E, kernel_dims, actions)
    strand = toric_ll(K)
    logger.info("strand of a module generated in degree %s: ranks %s", format_degree(d), strand.ranks)
    return StrandResult(strand, d, kernel_dims)


def _unit(F, n: int, k: int) -> np.ndarray:
    v = zero_vector(F, n)
    v[k] = F.one
    return v


def _right_multiply(F, keys, vec, i: int, position) -> np.ndarray:
    """vec * e_i, from the keys of one degree to the keys of the next."""
    moved = zero_vector(F, len(position))
    for k, c in enumerate(vec):
        if c == 0:
            continue
        v, word = keys[k]
        sign = merge_sign(word, (i,))
        if sign == 0:
            continue
        slot = position[(v, tuple(sorted(word + (i,))))]
        moved[slot] = F.add(moved[slot], c if sign > 0 else F.neg(c))
    return moved


def is_strongly_linear_matrix(phi: GradedMatrix) -> bool:
    """Every monomial of every entry has exponent sum one."""
    return all(sum(e) == 1 for row in phi.entries for f in row for e in f.terms)

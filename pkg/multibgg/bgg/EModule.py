"""
Modules over the exterior algebra E. Everything on this side is finite
dimensional, so modules are handled degree by degree with plain linear
algebra. E acts on the right throughout.
"""
from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

import numpy as np

from multibgg.colorized_logger import get_logger
from multibgg.core.ExtAlgebra import ExtAlgebra, ExtElement, Word, merge_sign
from multibgg.core.linalg import QuotientSpace, zeros
from multibgg.errors import Inhomogeneous, NotSquareZero
from multibgg.utils import Degree, deg, deg_add, format_degree

logger = get_logger('multibgg.bgg.EModule')


def _word_times(word: Word, i: int):
    """e_word * e_i as (sign, word); sign 0 when i is already in the word."""
    sign = merge_sign(word, (i,))
    return sign, tuple(sorted(word + (i,))) if sign else ()


@dataclass(frozen=True)
class EPresentation:
    """coker of `relations` (columns of ExtElements) on free generators of the given twists."""
    ring: ExtAlgebra
    twists: Tuple[Degree, ...]
    relations: Tuple[Tuple[ExtElement, ...], ...] = ()
    """one tuple per relation column, entry k the coefficient of generator k"""

    def __post_init__(self):
        for j, column in enumerate(self.relations):
            if len(column) != len(self.twists):
                raise ValueError(f"relation {j} has {len(column)} entries for {len(self.twists)} generators")
            self.relation_degree(j)

    @staticmethod
    def free(ring: ExtAlgebra, twists: Sequence[Sequence[int]]) -> "EPresentation":
        return EPresentation(ring, tuple(deg(t) for t in twists))

    @staticmethod
    def residue_field(ring: ExtAlgebra, twist: Sequence[int] = None) -> "EPresentation":
        twist = deg(twist) if twist is not None else ring.zero_degree()
        return EPresentation(ring, (twist,), tuple((ring.var(i),) for i in range(ring.nvars)))

    def relation_degree(self, j: int) -> Degree:
        degrees = {deg_add(self.twists[k], f.degree) for k, f in enumerate(self.relations[j]) if f}
        if len(degrees) > 1:
            raise Inhomogeneous(f"relation {j} mixes degrees {sorted(degrees)}")
        return degrees.pop() if degrees else None


@dataclass(frozen=True, eq=False)
class EModuleGraded:
    """
    Finitely supported graded E-module: the dimension of every nonzero piece
    N_delta and, for each variable i, the matrix of right multiplication by
    e_i from N_delta to N_(delta + deg e_i).
    """
    ring: ExtAlgebra
    pieces: Dict[Degree, int]
    actions: Dict[Tuple[int, Degree], np.ndarray] = field(default_factory=dict)

    def __post_init__(self):
        F = self.ring.field
        for i in range(self.ring.nvars):
            for j in range(i, self.ring.nvars):
                for delta in self.pieces:
                    composite = self._compose(i, j, delta)
                    if i != j:
                        composite = F.reduce(composite + self._compose(j, i, delta))
                    if np.any(composite != 0):
                        raise NotSquareZero(f"e_{i} and e_{j} do not anticommute on the piece {format_degree(delta)}")

    def _compose(self, i: int, j: int, delta: Degree) -> np.ndarray:
        """act_j . act_i on N_delta (multiply by e_i, then by e_j)."""
        F = self.ring.field
        first = self.action(i, delta)
        second = self.action(j, deg_add(delta, self.ring.var_degrees[i]))
        if first.shape[0] == 0:
            return zeros(F, second.shape[0], first.shape[1])
        return F.reduce(second.dot(first))

    def __eq__(self, other):
        if not isinstance(other, EModuleGraded):
            return NotImplemented
        pieces = lambda N: {d: n for d, n in N.pieces.items() if n}
        if self.ring != other.ring or pieces(self) != pieces(other):
            return False
        return all(np.array_equal(self.action(i, d), other.action(i, d))
                   for i in range(self.ring.nvars) for d in self.pieces)

    def dim(self, delta: Degree) -> int:
        return self.pieces.get(delta, 0)

    def action(self, i: int, delta: Degree) -> np.ndarray:
        target = deg_add(delta, self.ring.var_degrees[i])
        if (i, delta) in self.actions:
            return self.actions[(i, delta)]
        return zeros(self.ring.field, self.dim(target), self.dim(delta))

    @property
    def support(self) -> List[Degree]:
        return sorted(self.pieces)

    @property
    def total_dim(self) -> int:
        return sum(self.pieces.values())

    def dims_by_last_coordinate(self) -> Dict[int, int]:
        out: Dict[int, int] = {}
        for delta, n in self.pieces.items():
            out[delta[-1]] = out.get(delta[-1], 0) + n
        return out


def graded_pieces_of_e_module(N: EPresentation) -> EModuleGraded:
    """
    Pieces and e_i-actions of coker(relations). The support is contained in
    the generator degrees shifted by the degrees of the exterior monomials.
    """
    E = N.ring
    F = E.field
    words = list(E.all_words())
    keys_by_degree: Dict[Degree, list] = {}
    for k, t in enumerate(N.twists):
        for w in words:
            keys_by_degree.setdefault(deg_add(t, E.degree_of(w)), []).append((k, w))

    relations_by_degree: Dict[Degree, list] = {}
    for j, column in enumerate(N.relations):
        rho = N.relation_degree(j)
        if rho is None:
            continue
        for w in words:
            image = {}
            for k, f in enumerate(column):
                for u, c in f.terms.items():
                    sign = merge_sign(u, w)
                    if sign == 0:
                        continue
                    key = (k, tuple(sorted(u + w)))
                    image[key] = F.add(image.get(key, 0), c if sign > 0 else F.neg(c))
            image = {key: c for key, c in image.items() if c != 0}
            if image:
                relations_by_degree.setdefault(deg_add(rho, E.degree_of(w)), []).append(image)

    spaces = {delta: QuotientSpace(F, keys, relations_by_degree.get(delta, []))
              for delta, keys in keys_by_degree.items()}
    spaces = {delta: Q for delta, Q in spaces.items() if Q.dim}

    actions = {}
    for delta, Q in spaces.items():
        for i in range(E.nvars):
            target = deg_add(delta, E.var_degrees[i])
            if target not in spaces:
                continue
            T = spaces[target]
            A = zeros(F, T.dim, Q.dim)
            for col, (k, w) in enumerate(Q.basis_keys):
                sign, moved = _word_times(w, i)
                if sign:
                    A[:, col] = T.coordinates({(k, moved): F(sign)})
            if np.any(A != 0):
                actions[(i, delta)] = A
    logger.debug("E-module with %d nonzero pieces", len(spaces))
    return EModuleGraded(E, {delta: Q.dim for delta, Q in spaces.items()}, actions)

"""
Exact linear algebra over a Field on object-dtype numpy arrays, with the
elimination itself done by sympy's DomainMatrix over QQ or GF(p). All graded
piece computations (bases of M_d, multiplication maps, exterior kernels)
come down to the routines here.
"""
from typing import Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

import numpy as np
from sympy.polys.matrices import DomainMatrix

from multibgg.core.Field import Field


def zeros(field: Field, m: int, n: int) -> np.ndarray:
    return np.full((m, n), field.zero, dtype=object)


def zero_vector(field: Field, n: int) -> np.ndarray:
    return np.full((n,), field.zero, dtype=object)


def identity(field: Field, n: int) -> np.ndarray:
    M = zeros(field, n, n)
    for i in range(n):
        M[i, i] = field.one
    return M


def rref(field: Field, A: np.ndarray) -> Tuple[np.ndarray, List[int]]:
    """Reduced row echelon form (nonzero rows only) and pivot columns."""
    A = np.asarray(A, dtype=object)
    m, n = A.shape
    if m == 0 or n == 0:
        return zeros(field, 0, n), []
    rows = [[field.to_domain(x) for x in row] for row in A]
    R, pivots = DomainMatrix(rows, (m, n), field.domain).rref()
    reduced = R.to_list()[:len(pivots)]
    out = zeros(field, len(pivots), n)
    for i, row in enumerate(reduced):
        out[i] = [field.from_domain(x) for x in row]
    return out, list(pivots)


def rank(field: Field, A: np.ndarray) -> int:
    if A.size == 0:
        return 0
    return len(rref(field, A)[1])


def nullspace(field: Field, A: np.ndarray) -> List[np.ndarray]:
    """Basis of {v : A v = 0}, one vector per free column."""
    n = A.shape[1]
    R, pivots = rref(field, A)
    basis = []
    for f in (c for c in range(n) if c not in pivots):
        v = zero_vector(field, n)
        v[f] = field.one
        for i, pc in enumerate(pivots):
            v[pc] = field.neg(R[i, f])
        basis.append(v)
    return basis


def solve(field: Field, A: np.ndarray, b: np.ndarray) -> Optional[np.ndarray]:
    """Some x with A x = b, or None."""
    m, n = A.shape
    augmented = zeros(field, m, n + 1)
    augmented[:, :n] = A
    augmented[:, n] = b
    R, pivots = rref(field, augmented)
    if n in pivots:
        return None
    x = zero_vector(field, n)
    for i, pc in enumerate(pivots):
        x[pc] = R[i, n]
    return x


class QuotientSpace:
    """
    V / W where V has the ordered basis `keys` and W is spanned by
    `relations` (sparse dicts key -> coefficient). The basis of the quotient
    is the set of non-pivot keys of the reduced echelon form of W.
    """

    def __init__(self, field: Field, keys: Sequence[Hashable], relations: Iterable[Dict[Hashable, object]]):
        self.field = field
        self.keys = list(keys)
        self.index = {k: i for i, k in enumerate(self.keys)}
        rows = [self._dense(r) for r in relations]
        if rows:
            self._R, self._pivots = rref(field, np.array(rows, dtype=object).reshape(len(rows), len(self.keys)))
        else:
            self._R, self._pivots = zeros(field, 0, len(self.keys)), []
        pivot_set = set(self._pivots)
        self.basis_positions = [i for i in range(len(self.keys)) if i not in pivot_set]
        self.basis_keys = [self.keys[i] for i in self.basis_positions]

    @property
    def dim(self) -> int:
        return len(self.basis_positions)

    def _dense(self, vec: Dict[Hashable, object]) -> np.ndarray:
        v = zero_vector(self.field, len(self.keys))
        for k, c in vec.items():
            v[self.index[k]] = self.field.add(v[self.index[k]], c)
        return v

    def coordinates(self, vec: Dict[Hashable, object]) -> np.ndarray:
        """Coordinates of the class of `vec` in the quotient basis."""
        v = self._dense(vec)
        for i, pc in enumerate(self._pivots):
            if v[pc] != 0:
                v = self.field.reduce(v - v[pc] * self._R[i])
        return v[self.basis_positions]

    def lift(self, coords: Sequence) -> Dict[Hashable, object]:
        return {self.basis_keys[i]: c for i, c in enumerate(coords) if c != 0}


def coordinates_in_span(field: Field, basis: Sequence[np.ndarray], v: np.ndarray) -> Optional[np.ndarray]:
    """Coefficients expressing v in the span of the given (independent) vectors."""
    if not basis:
        return np.array([], dtype=object) if all(x == 0 for x in v) else None
    A = np.array(basis, dtype=object).reshape(len(basis), len(v)).T
    return solve(field, A, v)

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from multibgg.core.Polynomial import Polynomial
from multibgg.errors import Inhomogeneous, RingMismatch
from multibgg.modules import vectors
from multibgg.modules.FreeModule import FreeModule
from multibgg.modules.vectors import SVec
from multibgg.utils import Degree, deg, deg_add, format_degree


@dataclass(frozen=True)
class GradedMatrix:
    """
    Homogeneous map source -> target of degree `shift`: every nonzero entry
    satisfies target.twists[i] + deg(entry) == source.twists[j] + shift.
    Entries are stored row by row.
    """
    source: FreeModule
    target: FreeModule
    shift: Degree
    entries: Tuple[Tuple[Polynomial, ...], ...]

    def __post_init__(self):
        if self.source.ring != self.target.ring:
            raise RingMismatch("source and target live over different rings")
        if len(self.entries) != self.target.rank or any(len(r) != self.source.rank for r in self.entries):
            raise ValueError(f"entries do not have shape {self.target.rank} x {self.source.rank}")
        for i, row in enumerate(self.entries):
            for j, f in enumerate(row):
                if f.is_zero():
                    continue
                if deg_add(self.target.twists[i], f.degree) != deg_add(self.source.twists[j], self.shift):
                    raise Inhomogeneous(
                        f"entry ({i}, {j}) = {f} of degree {format_degree(f.degree)} breaks "
                        f"{format_degree(self.target.twists[i])} + deg = "
                        f"{format_degree(self.source.twists[j])} + {format_degree(self.shift)}")

    @staticmethod
    def of(source: FreeModule, target: FreeModule, rows: Sequence[Sequence[Polynomial]],
           shift: Optional[Sequence[int]] = None) -> "GradedMatrix":
        shift = deg(shift) if shift is not None else source.ring.zero_degree()
        return GradedMatrix(source, target, shift, tuple(tuple(r) for r in rows))

    @staticmethod
    def zero(source: FreeModule, target: FreeModule, shift: Degree = None) -> "GradedMatrix":
        ring = source.ring
        shift = shift if shift is not None else ring.zero_degree()
        return GradedMatrix(source, target, shift,
                            tuple(tuple(ring.zero() for _ in range(source.rank)) for _ in range(target.rank)))

    @staticmethod
    def identity(F: FreeModule) -> "GradedMatrix":
        ring = F.ring
        rows = tuple(tuple(ring.one() if i == j else ring.zero() for j in range(F.rank)) for i in range(F.rank))
        return GradedMatrix(F, F, ring.zero_degree(), rows)

    @staticmethod
    def from_columns(source: FreeModule, target: FreeModule, columns: Sequence[SVec],
                     shift: Degree = None) -> "GradedMatrix":
        ring = target.ring
        shift = shift if shift is not None else ring.zero_degree()
        cols = [vectors.to_polynomials(ring, v, target.rank) for v in columns]
        rows = tuple(tuple(cols[j][i] for j in range(source.rank)) for i in range(target.rank))
        return GradedMatrix(source, target, shift, rows)

    @staticmethod
    def with_columns(target: FreeModule, columns: Sequence[SVec], shift: Degree = None) -> "GradedMatrix":
        """Source twists read off the (nonzero, homogeneous) columns."""
        ring = target.ring
        shift = shift if shift is not None else ring.zero_degree()
        twists = []
        for v in columns:
            d = vectors.degree(ring, target.twists, v)
            if d is None:
                raise ValueError("with_columns needs nonzero columns to read their degrees")
            twists.append(tuple(x - s for x, s in zip(d, shift)))
        return GradedMatrix.from_columns(FreeModule(ring, tuple(twists)), target, columns, shift)

    @property
    def ring(self):
        return self.source.ring

    @property
    def nrows(self) -> int:
        return self.target.rank

    @property
    def ncols(self) -> int:
        return self.source.rank

    def entry(self, i: int, j: int) -> Polynomial:
        return self.entries[i][j]

    def column(self, j: int) -> SVec:
        return vectors.from_polynomials([row[j] for row in self.entries])

    def columns(self) -> List[SVec]:
        return [self.column(j) for j in range(self.ncols)]

    def apply(self, v: SVec) -> SVec:
        """Image of a source vector."""
        field = self.ring.field
        out = {}
        for (j, e), c in v.items():
            for i in range(self.nrows):
                f = self.entries[i][j]
                for e2, c2 in f.terms.items():
                    vectors.add_scaled(field, out, {(i, e2): c2}, c, e)
        return out

    def compose(self, other: "GradedMatrix") -> "GradedMatrix":
        """self . other (apply other first)."""
        if other.target != self.source:
            raise ValueError("composition of maps whose source and target do not match")
        ring = self.ring
        rows = []
        for i in range(self.nrows):
            row = []
            for k in range(other.ncols):
                acc = ring.zero()
                for j in range(self.ncols):
                    a = self.entries[i][j]
                    if a.is_zero():
                        continue
                    b = other.entries[j][k]
                    if not b.is_zero():
                        acc = acc + a * b
                row.append(acc)
            rows.append(tuple(row))
        return GradedMatrix(other.source, self.target, deg_add(self.shift, other.shift), tuple(rows))

    __matmul__ = compose

    def _entrywise(self, other: "GradedMatrix", op) -> "GradedMatrix":
        if (other.source, other.target, other.shift) != (self.source, self.target, self.shift):
            raise ValueError("entrywise operation on maps with different shapes or degrees")
        rows = tuple(tuple(op(a, b) for a, b in zip(r1, r2)) for r1, r2 in zip(self.entries, other.entries))
        return GradedMatrix(self.source, self.target, self.shift, rows)

    def __add__(self, other):
        return self._entrywise(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._entrywise(other, lambda a, b: a - b)

    def __neg__(self):
        return GradedMatrix(self.source, self.target, self.shift,
                            tuple(tuple(-a for a in row) for row in self.entries))

    def scale(self, c) -> "GradedMatrix":
        return GradedMatrix(self.source, self.target, self.shift,
                            tuple(tuple(a.scale(c) for a in row) for row in self.entries))

    def is_zero(self) -> bool:
        return all(a.is_zero() for row in self.entries for a in row)

    def is_minimal(self) -> bool:
        """All entries lie in the homogeneous maximal ideal."""
        return all(a.constant_term == 0 for row in self.entries for a in row)

    def select(self, rows: Sequence[int] = None, cols: Sequence[int] = None) -> "GradedMatrix":
        rows = range(self.nrows) if rows is None else rows
        cols = range(self.ncols) if cols is None else cols
        return GradedMatrix(self.source.select(cols), self.target.select(rows), self.shift,
                            tuple(tuple(self.entries[i][j] for j in cols) for i in rows))

    def transpose(self, c: Degree = None) -> "GradedMatrix":
        """Hom(-, S(c)) applied to this map (shift must be zero)."""
        if any(self.shift):
            raise ValueError("only degree-zero maps are dualized")
        rows = tuple(tuple(self.entries[i][j] for i in range(self.nrows)) for j in range(self.ncols))
        return GradedMatrix(self.target.dual(c), self.source.dual(c), self.shift, rows)

    def as_shift(self, shift: Degree) -> "GradedMatrix":
        """The same entries read as a map of degree `shift` (source twists absorb the difference)."""
        delta = tuple(a - b for a, b in zip(self.shift, shift))
        return GradedMatrix(FreeModule(self.ring, tuple(deg_add(t, delta) for t in self.source.twists)),
                            self.target, tuple(shift), self.entries)

    def __str__(self):
        from multibgg.io.render import render_matrix
        return render_matrix(self)

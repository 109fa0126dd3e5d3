"""
The Koszul dual exterior algebra E = Lambda(e_0, ..., e_n) of a multigraded
polynomial ring, graded by Z^t + Z with deg(e_i) = (-deg(x_i); -1).
"""
from dataclasses import dataclass
from functools import singledispatch
from typing import Dict, Optional, Tuple

from multibgg.core.Field import Field
from multibgg.core.Grading import GradingSpec
from multibgg.core.PolyRing import PolyRing
from multibgg.errors import Inhomogeneous, RingMismatch
from multibgg.utils import Degree, deg_add, deg_neg

Word = Tuple[int, ...]
"""an exterior monomial e_I stored as the sorted index tuple I"""


@dataclass(frozen=True)
class ExtAlgebra:
    field: Field
    var_names: Tuple[str, ...]
    var_degrees: Tuple[Degree, ...]
    symmetric_names: Optional[Tuple[str, ...]] = None
    """names of the dual polynomial variables, kept so the round trip is exact"""
    theta: Optional[Tuple[int, ...]] = None

    def __repr__(self):
        return f"{self.field.name}[{', '.join(self.var_names)}] (exterior)"

    @property
    def nvars(self) -> int:
        return len(self.var_names)

    @property
    def rank(self) -> int:
        return len(self.var_degrees[0])

    def zero_degree(self) -> Degree:
        return (0,) * self.rank

    def degree_of(self, word: Word) -> Degree:
        total = self.zero_degree()
        for i in word:
            total = deg_add(total, self.var_degrees[i])
        return total

    def zero(self) -> "ExtElement":
        return ExtElement(self, {})

    def one(self) -> "ExtElement":
        return self.scalar(1)

    def scalar(self, c) -> "ExtElement":
        return ExtElement(self, {(): self.field(c)})

    def word(self, word: Word, c=1) -> "ExtElement":
        sign, normalized = sort_word(word)
        if sign == 0:
            return self.zero()
        return ExtElement(self, {normalized: self.field(sign * self.field(c))})

    def var(self, i: int) -> "ExtElement":
        return self.word((i,))

    def variable(self, name: str) -> "ExtElement":
        try:
            return self.var(self.var_names.index(name))
        except ValueError:
            raise KeyError(f"unknown variable {name!r} in {self}") from None

    def all_words(self):
        """All 2^(n+1) exterior monomials, shortest first."""
        from itertools import combinations
        n = self.nvars
        for length in range(n + 1):
            yield from combinations(range(n), length)

    @property
    def symmetric_degree_sum(self) -> Degree:
        """sum_i deg(x_i), read off the exterior degrees."""
        total = (0,) * (self.rank - 1)
        for d in self.var_degrees:
            total = deg_add(total, deg_neg(d[:-1]))
        return total


def sort_word(word: Word) -> Tuple[int, Word]:
    """Sign of the permutation sorting `word`, 0 when an index repeats."""
    if len(set(word)) != len(word):
        return 0, ()
    inversions = sum(1 for a in range(len(word)) for b in range(a + 1, len(word)) if word[a] > word[b])
    return (-1) ** inversions, tuple(sorted(word))


def merge_sign(left: Word, right: Word) -> int:
    """Sign of e_left * e_right as a multiple of e_(left u right); 0 when they overlap."""
    if set(left) & set(right):
        return 0
    inversions = sum(1 for i in left for j in right if i > j)
    return -1 if inversions % 2 else 1


class ExtElement:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: ExtAlgebra, terms: Optional[Dict[Word, object]] = None):
        self.ring = ring
        self.terms = {w: c for w, c in (terms or {}).items() if c != 0}

    def _coerce(self, other) -> "ExtElement":
        if isinstance(other, ExtElement):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring} vs {other.ring}")
            return other
        return self.ring.scalar(other)

    def __add__(self, other):
        other = self._coerce(other)
        F = self.ring.field
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = F.add(terms.get(w, 0), c)
        return ExtElement(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        F = self.ring.field
        return ExtElement(self.ring, {w: F.neg(c) for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        if isinstance(other, ExtElement):
            return ext_multiply(self, other)
        return ext_multiply(self, self._coerce(other))

    def __rmul__(self, other):
        return ext_multiply(self._coerce(other), self)

    def __pow__(self, k: int):
        result = self.ring.one()
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, ExtElement):
            if other == 0:
                return not self.terms
            return self == self.ring.scalar(other)
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> Optional[Degree]:
        degrees = {self.ring.degree_of(w) for w in self.terms}
        if not degrees:
            return None
        if len(degrees) > 1:
            raise Inhomogeneous(f"{self} is not homogeneous")
        return degrees.pop()

    def __str__(self):
        if not self.terms:
            return "0"
        F = self.ring.field
        names = self.ring.var_names
        pieces = []
        for w, c in sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0])):
            c = F.signed(c)
            mono = "*".join(names[i] for i in w)
            negative = c < 0
            mag = -c if negative else c
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not pieces:
                pieces.append(f"-{body}" if negative else body)
            else:
                pieces.append(f" - {body}" if negative else f" + {body}")
        return "".join(pieces)

    def __repr__(self):
        return f"ExtElement({self})"

    render = __str__


def ext_multiply(f: ExtElement, g: ExtElement) -> ExtElement:
    if f.ring != g.ring:
        raise RingMismatch(f"{f.ring} vs {g.ring}")
    F = f.ring.field
    terms = {}
    for w1, c1 in f.terms.items():
        for w2, c2 in g.terms.items():
            sign = merge_sign(w1, w2)
            if sign == 0:
                continue
            w = tuple(sorted(w1 + w2))
            c = F.mul(c1, c2)
            terms[w] = F.add(terms.get(w, 0), c if sign > 0 else F.neg(c))
    return ExtElement(f.ring, terms)


@singledispatch
def dual_ring_toric(ring):
    raise TypeError(f"no Koszul dual for {type(ring).__name__}")


@dual_ring_toric.register
def _(ring: PolyRing) -> ExtAlgebra:
    names = tuple(f"e_{i}" for i in range(ring.nvars))
    degrees = tuple(deg_neg(d) + (-1,) for d in ring.var_degrees)
    return ExtAlgebra(ring.field, names, degrees, ring.var_names, ring.grading.theta)


@dual_ring_toric.register
def _(ring: ExtAlgebra) -> PolyRing:
    names = ring.symmetric_names or tuple(f"x_{i}" for i in range(ring.nvars))
    degrees = tuple(deg_neg(d[:-1]) for d in ring.var_degrees)
    return PolyRing(ring.field, names, GradingSpec(len(degrees[0]), degrees, ring.theta))

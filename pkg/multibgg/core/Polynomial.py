from typing import Dict, Optional, Tuple

from multibgg.errors import Inhomogeneous, RingMismatch
from multibgg.utils import Degree, exp_add

Exponent = Tuple[int, ...]


class Polynomial:
    """
    Sparse element of a PolyRing: exponent vector -> nonzero coefficient.
    Treated as immutable once built.
    """
    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms: Optional[Dict[Exponent, object]] = None):
        self.ring = ring
        self.terms = {e: c for e, c in (terms or {}).items() if c != 0}

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring} vs {other.ring}")
            return other
        return self.ring.scalar(other)

    def __add__(self, other):
        other = self._coerce(other)
        F = self.ring.field
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = F.add(terms.get(e, 0), c)
            if s == 0:
                terms.pop(e, None)
            else:
                terms[e] = s
        return Polynomial(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        F = self.ring.field
        return Polynomial(self.ring, {e: F.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        F = self.ring.field
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = exp_add(e1, e2)
                terms[e] = F.add(terms.get(e, 0), F.mul(c1, c2))
        return Polynomial(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = self.ring.one()
        for _ in range(k):
            result = result * self
        return result

    def scale(self, c) -> "Polynomial":
        F = self.ring.field
        c = F(c)
        return Polynomial(self.ring, {e: F.mul(v, c) for e, v in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
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
    def constant_term(self):
        return self.terms.get((0,) * self.ring.nvars, self.ring.field.zero)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degrees = {self.ring.degree_of(e) for e in self.terms}
        return len(degrees) <= 1

    @property
    def degree(self) -> Optional[Degree]:
        """Common multidegree of all terms; None for the zero polynomial."""
        degrees = {self.ring.degree_of(e) for e in self.terms}
        if not degrees:
            return None
        if len(degrees) > 1:
            raise Inhomogeneous(f"{self} is not homogeneous")
        return degrees.pop()

    def sorted_terms(self):
        ring = self.ring
        return sorted(self.terms.items(), key=lambda t: (ring.weight_of(t[0]), t[0]), reverse=True)

    def __str__(self):
        return _format(self, sep="*", power="^")

    def __repr__(self):
        return f"Polynomial({self})"

    def render(self) -> str:
        """Transcript style: xy, x2 for one-letter variables, x_0^2*x_1 otherwise."""
        if all(len(n) == 1 for n in self.ring.var_names):
            return _format(self, sep="", power="")
        return str(self)


def _format(f: Polynomial, sep: str, power: str) -> str:
    if not f.terms:
        return "0"
    F = f.ring.field
    names = f.ring.var_names
    pieces = []
    for e, c in f.sorted_terms():
        c = F.signed(c)
        factors = []
        for name, k in zip(names, e):
            if k == 1:
                factors.append(name)
            elif k > 1:
                factors.append(f"{name}{power}{k}")
        mono = sep.join(factors)
        negative = c < 0
        mag = -c if negative else c
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}{sep}{mono}"
        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f" - {body}" if negative else f" + {body}")
    return "".join(pieces)

"""
Sparse module vectors: {(position, exponent): coefficient}. This is the
working representation of the Groebner engine; GradedMatrix columns are
converted to and from it at the boundary.
"""
from typing import Dict, List, Sequence, Tuple

from multibgg.core.Polynomial import Exponent, Polynomial
from multibgg.errors import Inhomogeneous
from multibgg.utils import Degree, deg_add, exp_add

Term = Tuple[int, Exponent]
SVec = Dict[Term, object]


def from_polynomials(polys: Sequence[Polynomial]) -> SVec:
    return {(i, e): c for i, f in enumerate(polys) for e, c in f.terms.items()}


def to_polynomials(ring, v: SVec, rank: int) -> List[Polynomial]:
    buckets = [dict() for _ in range(rank)]
    for (i, e), c in v.items():
        buckets[i][e] = c
    return [Polynomial(ring, b) for b in buckets]


def add_scaled(field, v: SVec, w: SVec, c, mult: Exponent = None, shift: int = 0) -> None:
    """v += c * x^mult * w (positions of w moved by `shift`), in place."""
    for (i, e), a in w.items():
        key = (i + shift, exp_add(e, mult) if mult is not None else e)
        s = field.add(v.get(key, 0), field.mul(c, a))
        if s == 0:
            v.pop(key, None)
        else:
            v[key] = s


def scale(field, v: SVec, c) -> SVec:
    out = {}
    for t, a in v.items():
        p = field.mul(a, c)
        if p != 0:
            out[t] = p
    return out


def multiply(field, v: SVec, f: Polynomial) -> SVec:
    out = {}
    for e, c in f.terms.items():
        add_scaled(field, out, v, c, e)
    return out


def term_degree(ring, twists: Sequence[Degree], term: Term) -> Degree:
    i, e = term
    return deg_add(twists[i], ring.degree_of(e))


def degree(ring, twists: Sequence[Degree], v: SVec):
    """Common degree of all terms of v; None for zero."""
    degrees = {term_degree(ring, twists, t) for t in v}
    if not degrees:
        return None
    if len(degrees) > 1:
        raise Inhomogeneous(f"vector with terms in degrees {sorted(degrees)} is not homogeneous")
    return degrees.pop()


def restrict(v: SVec, start: int, stop: int) -> SVec:
    """Components start..stop-1, renumbered from 0."""
    return {(i - start, e): c for (i, e), c in v.items() if start <= i < stop}

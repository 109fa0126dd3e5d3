"""
Homogeneous Buchberger algorithm for submodules of graded free modules.
S-pairs and input generators share one queue ordered by theta-weight, pairs
before generators at equal weight, so a generator that reduces to zero when
it is reached is redundant. That gives minimal generators for free.
"""
import heapq
from dataclasses import dataclass, field
from typing import List, Sequence

from multibgg.colorized_logger import get_logger
from multibgg.groebner.ModuleOrder import ModuleOrder
from multibgg.modules import vectors
from multibgg.modules.FreeModule import FreeModule
from multibgg.modules.vectors import SVec, Term
from multibgg.utils import exp_divides, exp_lcm, exp_sub

logger = get_logger('multibgg.groebner.GroebnerBasis')

_PAIR, _GENERATOR = 0, 1


@dataclass
class GroebnerBasis:
    ambient: FreeModule
    elements: List[SVec]
    order: ModuleOrder
    reduced: bool = True
    minimal_generators: List[int] = field(default_factory=list)
    """indices of the input generators that survived (a minimal generating set)"""

    def __post_init__(self):
        self.leads: List[Term] = [self.order.lead(g) for g in self.elements]

    @property
    def base_field(self):
        return self.ambient.ring.field

    def normal_form(self, v: SVec) -> SVec:
        return _reduce(v, self.elements, self.leads, self.order, self.base_field)

    def contains(self, v: SVec) -> bool:
        return not self.normal_form(v)

    def to_json(self) -> list:
        """Debug dump: one list of [position, exponent, coefficient] triples per element."""
        by_order = lambda t: self.order.key(t[0])
        return [[[pos, list(exp), str(c)] for (pos, exp), c in sorted(g.items(), key=by_order, reverse=True)]
                for g in self.elements]

    def spair_residues(self):
        """Normal forms of every S-pair; all empty for a Groebner basis."""
        for i in range(len(self.elements)):
            for j in range(i + 1, len(self.elements)):
                if self.leads[i][0] == self.leads[j][0]:
                    yield self.normal_form(_spoly(self.elements[i], self.leads[i],
                                                  self.elements[j], self.leads[j], self.base_field))


def buchberger(gens: Sequence[SVec], ambient: FreeModule, order: ModuleOrder = None) -> GroebnerBasis:
    """Reduced Groebner basis of the submodule generated by `gens`."""
    ring = ambient.ring
    F = ring.field
    order = order or ModuleOrder(ring, ambient.twists)

    heap = []
    for idx, g in enumerate(gens):
        if not g:
            continue
        vectors.degree(ring, ambient.twists, g)  # raises Inhomogeneous
        heapq.heappush(heap, (order.weight(next(iter(g))), _GENERATOR, idx, -1))

    basis: List[SVec] = []
    leads: List[Term] = []
    minimal = []
    pairs_done = 0
    while heap:
        _, kind, i, j = heapq.heappop(heap)
        if kind == _GENERATOR:
            v = gens[i]
        else:
            v = _spoly(basis[i], leads[i], basis[j], leads[j], F)
            pairs_done += 1
        r = _reduce(v, basis, leads, order, F)
        if not r:
            continue
        lead = order.lead(r)
        r = vectors.scale(F, r, F.inv(r[lead]))
        if kind == _GENERATOR:
            minimal.append(i)
        new = len(basis)
        for k, (p, e) in enumerate(leads):
            if p == lead[0]:
                heapq.heappush(heap, (order.weight((p, exp_lcm(e, lead[1]))), _PAIR, k, new))
        basis.append(r)
        leads.append(lead)

    logger.debug("buchberger: %d generators, %d S-pairs, basis of size %d", len(gens), pairs_done, len(basis))
    # no lead divides an earlier lead (weights only grow), so only tails need reducing
    reduced = []
    for k, g in enumerate(basis):
        others = basis[:k] + basis[k + 1:]
        other_leads = leads[:k] + leads[k + 1:]
        lead = leads[k]
        tail = dict(g)
        c = tail.pop(lead)
        tail = _reduce(tail, others, other_leads, order, F)
        tail[lead] = c
        reduced.append(tail)
    return GroebnerBasis(ambient, reduced, order, True, minimal)


def _spoly(f: SVec, lf: Term, g: SVec, lg: Term, F) -> SVec:
    lcm = exp_lcm(lf[1], lg[1])
    out = {}
    vectors.add_scaled(F, out, f, F.inv(f[lf]), exp_sub(lcm, lf[1]))
    vectors.add_scaled(F, out, g, F.neg(F.inv(g[lg])), exp_sub(lcm, lg[1]))
    return out


def _reduce(v: SVec, basis: Sequence[SVec], leads: Sequence[Term], order: ModuleOrder, F) -> SVec:
    """Full reduction: no term of the result is divisible by a lead term."""
    v = dict(v)
    remainder = {}
    while v:
        t = order.lead(v)
        c = v[t]
        hit = None
        for k, (p, e) in enumerate(leads):
            if p == t[0] and exp_divides(e, t[1]):
                hit = k
                break
        if hit is None:
            remainder[t] = c
            del v[t]
            continue
        g = basis[hit]
        factor = F.neg(F.div(c, g[leads[hit]]))
        vectors.add_scaled(F, v, g, factor, exp_sub(t[1], leads[hit][1]))
    return remainder


def minimal_generators(gens: Sequence[SVec], ambient: FreeModule) -> List[int]:
    """Indices of a minimal generating subset, chosen greedily in weight order."""
    return buchberger(gens, ambient).minimal_generators


def normal_form(v: SVec, G: GroebnerBasis) -> SVec:
    return G.normal_form(v)

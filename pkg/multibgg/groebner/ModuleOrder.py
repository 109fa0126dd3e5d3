from typing import Sequence

from multibgg.core.PolyRing import PolyRing
from multibgg.modules.vectors import SVec, Term
from multibgg.utils import Degree, deg_add


class ModuleOrder:
    """
    Position over term: a lower position index is larger; inside a position
    monomials compare by theta-weight, then reverse lexicographically.
    """

    def __init__(self, ring: PolyRing, twists: Sequence[Degree]):
        self.ring = ring
        self.twists = tuple(twists)

    def key(self, term: Term):
        pos, exp = term
        return -pos, self.ring.weight_of(exp), tuple(-e for e in reversed(exp))

    def lead(self, v: SVec) -> Term:
        return max(v, key=self.key)

    def degree(self, term: Term) -> Degree:
        pos, exp = term
        return deg_add(self.twists[pos], self.ring.degree_of(exp))

    def weight(self, term: Term) -> int:
        return self.ring.weight(self.degree(term))

from .ExtAlgebra import ExtAlgebra, ExtElement, dual_ring_toric, ext_multiply
from .Field import Field
from .Grading import GradingSpec, find_positivity_functional
from .PolyRing import PolyRing, mk_poly_ring, monomials_of_degree
from .Polynomial import Polynomial

from .FComplex import FComplex
from .FreeModule import FreeModule
from .GradedMatrix import GradedMatrix
from .PresentedModule import PresentedModule
from .operations import compose_maps, direct_sum, direct_sum_modules, hconcat, twist, vconcat
from .constructors import cokernel, free_module, minors, minors_quotient, quotient_ring, residue_field

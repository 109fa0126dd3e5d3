from .GroebnerBasis import GroebnerBasis, buchberger, minimal_generators, normal_form
from .ModuleOrder import ModuleOrder
from .presentation import (is_zero_module, kernel_of_presented_map, kernel_presentation, minimal_presentation,
                           prune, subquotient)
from .syzygies import check_relations_preserved, kernel_generators, syzygies

from .DifferentialEModule import DifferentialEModule
from .EModule import EModuleGraded, EPresentation, graded_pieces_of_e_module
from .functors import default_degree_window, omega_twist_degree, toric_ll, toric_rr

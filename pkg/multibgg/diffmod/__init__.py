from .DifferentialModule import DMorphism, DifferentialModule, FlagDM, mk_differential_module
from .FlagResolution import ConvergenceStatus, FlagResolution
from .flags import block_degree, fold_complex, unfold_flag
from .homology import cone_dm, homology_dm, homology_with_cycles, is_minimal_dm
from .minimize import minimize_dm
from .resolve import res_dm, res_min_flag

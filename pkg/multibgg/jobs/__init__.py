from dataclasses import dataclass

from .ExtJob import ExtJob
from .FreeResJob import FreeResJob
from .GradedPieceJob import GradedPieceJob
from .Job import Job
from .JobSpec import JobSpec
from .KEYS import KEYS
from .LinearStrandJob import LinearStrandJob
from .MinimizeDMJob import MinimizeDMJob
from .ResDMJob import ResDMJob
from .ResMinFlagJob import ResMinFlagJob
from .ToricLLJob import ToricLLJob
from .ToricRRJob import ToricRRJob


@dataclass
class JobMetaData:
    title: str
    short_description: str
    payload: str
    """payload fields the job reads"""
    class_: type[Job]


JOBS: dict[KEYS, JobMetaData] = {
    KEYS.RES_DM: JobMetaData(title="Free flag resolution",
                             short_description="resDM: free flag F -> D with exact cone, by iterated cones",
                             payload="dm",
                             class_=ResDMJob),
    KEYS.MINIMIZE_DM: JobMetaData(title="Minimize a free differential module",
                                  short_description="split off contractible summands until no unit entries remain",
                                  payload="dm, resolve?",
                                  class_=MinimizeDMJob),
    KEYS.RES_MIN_FLAG: JobMetaData(title="Minimal free flag resolution",
                                   short_description="degree-zero differential modules over a positive Z-grading",
                                   payload="dm",
                                   class_=ResMinFlagJob),
    KEYS.TORIC_LL: JobMetaData(title="BGG functor L",
                               short_description="complex of free S-modules from a graded E-module",
                               payload="emodule",
                               class_=ToricLLJob),
    KEYS.TORIC_RR: JobMetaData(title="BGG functor R",
                               short_description="differential E-module of a module on a degree window",
                               payload="module, degrees?",
                               class_=ToricRRJob),
    KEYS.LINEAR_STRAND: JobMetaData(title="Strongly linear strand",
                                    short_description="linear strand of the minimal resolution via L of a kernel",
                                    payload="module",
                                    class_=LinearStrandJob),
    KEYS.FREE_RES: JobMetaData(title="Minimal free resolution",
                               short_description="iterated minimal syzygies",
                               payload="module, length?",
                               class_=FreeResJob),
    KEYS.EXT: JobMetaData(title="Ext module",
                          short_description="Ext^i(M, S(c)) from a dualized resolution",
                          payload="module, index, twist?",
                          class_=ExtJob),
    KEYS.GRADED_PIECE: JobMetaData(title="Graded piece",
                                   short_description="dimension and monomial basis of M_d",
                                   payload="module, degree | degrees",
                                   class_=GradedPieceJob),
}

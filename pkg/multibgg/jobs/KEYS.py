try:
    from enum import StrEnum
except ImportError:  # Python < 3.11
    from enum import Enum

    class StrEnum(str, Enum):
        __str__ = str.__str__
        __format__ = str.__format__


class KEYS(StrEnum):
    RES_DM = "res-dm"
    MINIMIZE_DM = "minimize-dm"
    RES_MIN_FLAG = "res-min-flag"
    TORIC_LL = "toric-ll"
    TORIC_RR = "toric-rr"
    LINEAR_STRAND = "linear-strand"
    FREE_RES = "free-res"
    EXT = "ext"
    GRADED_PIECE = "graded-piece"

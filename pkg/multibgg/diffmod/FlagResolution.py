from dataclasses import dataclass
from enum import Enum

from multibgg.diffmod.DifferentialModule import DifferentialModule, DMorphism, FlagDM


class ConvergenceStatus(Enum):
    COMPLETE = "complete"
    TRUNCATED = "truncated"


@dataclass(frozen=True)
class FlagResolution:
    """A free flag F with augmentation F -> D; cone(augmentation) is exact when COMPLETE."""
    flag: FlagDM
    augmentation: DMorphism
    status: ConvergenceStatus
    iterations: int

    @property
    def target(self) -> DifferentialModule:
        return self.augmentation.target

    @property
    def complete(self) -> bool:
        return self.status is ConvergenceStatus.COMPLETE

    def cone(self) -> DifferentialModule:
        from multibgg.diffmod.homology import cone_dm
        return cone_dm(self.augmentation)

from dataclasses import dataclass

from typing_extensions import Self

from pcn_bench.helpers.exceptions import PcnBenchBadRequestException


@dataclass(frozen=True, slots=True)
class LinkConfig:
    """
    Capacity of a PCN link and its rate thresholds, all in bits/second.
    admissible_rate (Ar) blocks new flows, supportable_rate (Sr) triggers
    termination, objective_rate (Or) is the Additional Buffer target
    """
    capacity_bps: float
    admissible_rate: float
    supportable_rate: float
    objective_rate: float

    def __post_init__(self):
        if not 0 < self.admissible_rate <= self.supportable_rate \
                <= self.capacity_bps:
            raise PcnBenchBadRequestException(
                f'Link thresholds must satisfy 0 < Ar <= Sr <= capacity. '
                f'Given Ar={self.admissible_rate}, '
                f'Sr={self.supportable_rate}, capacity={self.capacity_bps}')
        if not self.admissible_rate <= self.objective_rate \
                <= self.capacity_bps:
            raise PcnBenchBadRequestException(
                f'Link thresholds must satisfy Ar <= Or <= capacity. '
                f'Given Ar={self.admissible_rate}, '
                f'Or={self.objective_rate}, capacity={self.capacity_bps}')

    @classmethod
    def from_fractions(cls, capacity_bps: float, ar_fraction: float,
                       sr_fraction: float, or_fraction: float
                       ) -> Self:
        return cls(
            capacity_bps=capacity_bps,
            admissible_rate=capacity_bps * ar_fraction,
            supportable_rate=capacity_bps * sr_fraction,
            objective_rate=capacity_bps * or_fraction,
        )

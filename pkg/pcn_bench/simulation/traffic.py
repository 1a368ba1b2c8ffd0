import math
from dataclasses import dataclass
from fractions import Fraction

from typing_extensions import Self

from pcn_bench.helpers.constants import MICROS_PER_SECOND
from pcn_bench.helpers.exceptions import PcnBenchBadRequestException
from pcn_bench.models import SimTime
from pcn_bench.models.sim_time import from_seconds


@dataclass(frozen=True, slots=True)
class PauseSchedule:
    """
    Global generator pauses of length_us starting at every multiple of
    interval_us (the first one at interval_us). A zero interval or length
    disables pausing
    """
    interval_us: int
    length_us: int

    @classmethod
    def from_seconds(cls, interval: float, length: float) -> Self:
        return cls(interval_us=from_seconds(interval),
                   length_us=from_seconds(length))

    @property
    def enabled(self) -> bool:
        return self.interval_us > 0 and self.length_us > 0

    def pause_end(self, time: SimTime) -> SimTime | None:
        """
        End of the pause containing time, None outside pauses
        """
        if not self.enabled or time < self.interval_us:
            return None
        start = time - time % self.interval_us
        if time < start + self.length_us:
            return SimTime(start + self.length_us)
        return None

    def is_paused(self, time: SimTime) -> bool:
        return self.pause_end(time) is not None

    def starts_before(self, end: SimTime) -> list[SimTime]:
        if not self.enabled:
            return []
        return [SimTime(t) for t in range(self.interval_us, end,
                                          self.interval_us)]


class CbrClock:
    """
    Constant bit rate departure clock. Spacing is 1/rate seconds in whole
    microseconds; the fractional remainder is carried so the long-run rate
    is exact
    """

    def __init__(self, packet_rate: float, start: SimTime):
        if packet_rate <= 0:
            raise PcnBenchBadRequestException(
                f'Packet rate must be positive. Given value: {packet_rate}')
        self.period = Fraction(MICROS_PER_SECOND) / Fraction(packet_rate)
        self.ideal = Fraction(start)

    def rebase(self, time: SimTime) -> None:
        self.ideal = Fraction(time)


def cbr_next_departure(clock: CbrClock, now: SimTime,
                       pauses: PauseSchedule | None = None) -> SimTime:
    clock.ideal += clock.period
    departure = SimTime(max(now, math.floor(clock.ideal)))
    if pauses is not None:
        resume = pauses.pause_end(departure)
        if resume is not None:
            clock.rebase(resume)
            departure = resume
    return departure

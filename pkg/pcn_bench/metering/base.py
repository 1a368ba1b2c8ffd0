from abc import ABC, abstractmethod

from pcn_bench.helpers.constants import Technique
from pcn_bench.models import MeterDecision, Packet, SimTime


class Meter(ABC):
    """
    Per-link metering/marking discipline. One instance is bound to one
    simulated link and owned by it, so no operation needs locking
    """
    technique: Technique
    # True when the meter keeps arriving packets in its own buffers and the
    # link must dequeue through schedule_next()
    owns_buffer: bool = False

    @abstractmethod
    def on_arrival(self, packet: Packet, now: SimTime,
                   queue_len: int) -> MeterDecision:
        """
        Renders exactly one verdict for the arriving packet. The packet may
        be updated in place (codepoint, priority, PCN mark)
        """

    @abstractmethod
    def describe(self) -> dict[str, float]:
        """
        Parameters in effect, for reports
        """

    def schedule_next(self) -> Packet | None:
        raise NotImplementedError(
            f'{type(self).__name__} does not buffer packets')

    def __len__(self) -> int:
        return 0

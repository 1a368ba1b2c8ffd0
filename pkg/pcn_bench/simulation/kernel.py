import heapq
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from pcn_bench.helpers.exceptions import PcnBenchInternalException
from pcn_bench.models import SimTime
from pcn_bench.models.sim_time import ZERO


class EventKind(str, Enum):
    PACKET_ARRIVAL = 'PacketArrival'
    PACKET_DEPARTURE = 'PacketDeparture'
    EGRESS_ARRIVAL = 'EgressArrival'
    ACK_ARRIVAL = 'AckArrival'
    FLOW_REQUEST = 'FlowRequest'
    FLOW_END = 'FlowEnd'
    FEEDBACK_SIGNAL = 'FeedbackSignal'
    GENERATOR_TICK = 'GeneratorTick'
    MEASURE_TICK = 'MeasureTick'
    PAUSE_START = 'PauseStart'
    PAUSE_END = 'PauseEnd'
    SIM_END = 'SimEnd'


@dataclass(slots=True)
class Event:
    time: SimTime
    seq: int
    kind: EventKind
    payload: Any = field(default=None)

    @property
    def key(self) -> tuple[int, int]:
        return self.time, self.seq


class EventQueue:
    """
    Pending events ordered by (time, seq). seq grows with every scheduling,
    so events of the same instant pop in insertion order
    """

    def __init__(self):
        self._heap: list[tuple[int, int, Event]] = []
        self._seq = 0
        self.now: SimTime = ZERO

    def schedule(self, time: SimTime, kind: EventKind,
                 payload: Any = None) -> Event:
        if time < self.now:
            raise PcnBenchInternalException(
                f'Event {kind.value} scheduled at {time} us, before the '
                f'current time {self.now} us')
        event = Event(time=time, seq=self._seq, kind=kind, payload=payload)
        self._seq += 1
        heapq.heappush(self._heap, (time, event.seq, event))
        return event

    def schedule_in(self, delay: int, kind: EventKind,
                    payload: Any = None) -> Event:
        return self.schedule(SimTime(self.now + delay), kind, payload)

    def pop_next(self) -> Event | None:
        """
        Returns None once nothing is pending: the end of the simulation
        """
        if not self._heap:
            return None
        _, _, event = heapq.heappop(self._heap)
        self.now = event.time
        return event

    def __len__(self) -> int:
        return len(self._heap)

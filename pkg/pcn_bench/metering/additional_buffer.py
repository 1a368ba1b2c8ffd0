"""
Additional Buffer technique.

Arrivals are classified against the threshold rate Tr = (Ar + Or) / 2: while
the measured arrival rate stays at or below Tr packets are Accepted, above it
they are Degraded and carry a PCN mark. Both classes share one bounded
buffer, and a deficit round robin scheduler serves them in proportion
Wb : Wd = Tr/Or : 1 - Tr/Or.
"""
from collections import deque
from dataclasses import dataclass, field

from pcn_bench.helpers.constants import Technique
from pcn_bench.helpers.exceptions import PcnBenchBadRequestException
from pcn_bench.helpers.log_helper import get_logger
from pcn_bench.metering.bandwidth_meter import (
    BandwidthMeterState, bm_measure, bm_record,
)
from pcn_bench.metering.base import Meter
from pcn_bench.models import MeterDecision, Packet, Priority, SimTime

_LOG = get_logger(__name__)

DRR_QUANTUM_BYTES = 1500


def ab_compute_threshold(admissible_rate: float,
                         objective_rate: float) -> float:
    if admissible_rate > objective_rate:
        raise PcnBenchBadRequestException(
            f'Admissible rate {admissible_rate} exceeds objective rate '
            f'{objective_rate}')
    return (admissible_rate + objective_rate) / 2


def ab_weights(threshold_rate: float,
               objective_rate: float) -> tuple[float, float]:
    """
    Returns (Wd, Wb)
    """
    if objective_rate <= 0:
        raise PcnBenchBadRequestException(
            f'Objective rate must be positive. Given value: {objective_rate}')
    if not 0 < threshold_rate <= objective_rate:
        raise PcnBenchBadRequestException(
            f'Threshold rate must be in (0, {objective_rate}]. Given value: '
            f'{threshold_rate}')
    wb = threshold_rate / objective_rate
    return 1.0 - wb, wb


@dataclass(frozen=True, slots=True)
class AbVerdict:
    enqueued: bool
    priority: Priority | None = None

    @classmethod
    def drop(cls) -> 'AbVerdict':
        return cls(enqueued=False)


@dataclass(slots=True)
class AdditionalBufferState:
    tr: float
    wd: float
    wb: float
    buffer_capacity: int
    rate_estimator: BandwidthMeterState
    accepted_queue: deque[Packet] = field(default_factory=deque)
    degraded_queue: deque[Packet] = field(default_factory=deque)
    deficit: dict[Priority, float] = field(default_factory=lambda: {
        Priority.ACCEPTED: 0.0, Priority.DEGRADED: 0.0
    })
    turn: Priority = Priority.ACCEPTED

    def __post_init__(self):
        if self.buffer_capacity <= 0:
            raise PcnBenchBadRequestException(
                f'Buffer capacity must be positive. Given value: '
                f'{self.buffer_capacity}')

    @classmethod
    def for_rates(cls, admissible_rate: float, objective_rate: float,
                  buffer_capacity: int, mi: float
                  ) -> 'AdditionalBufferState':
        tr = ab_compute_threshold(admissible_rate, objective_rate)
        wd, wb = ab_weights(tr, objective_rate)
        return cls(
            tr=tr, wd=wd, wb=wb, buffer_capacity=buffer_capacity,
            rate_estimator=BandwidthMeterState(mi=mi, b_thr=tr),
        )

    def queue(self, priority: Priority) -> deque[Packet]:
        if priority is Priority.ACCEPTED:
            return self.accepted_queue
        return self.degraded_queue

    def quantum(self, priority: Priority) -> float:
        weight = self.wb if priority is Priority.ACCEPTED else self.wd
        return weight * DRR_QUANTUM_BYTES

    def __len__(self) -> int:
        return len(self.accepted_queue) + len(self.degraded_queue)


def ab_on_arrival(state: AdditionalBufferState, pkt: Packet,
                  now: SimTime) -> AbVerdict:
    bm_record(state.rate_estimator, now, pkt.size_bytes)
    rate = bm_measure(state.rate_estimator, now)
    if rate <= state.tr:
        pkt.priority = Priority.ACCEPTED
    else:
        pkt.priority = Priority.DEGRADED
        pkt.mark_pcn()
    if len(state) >= state.buffer_capacity:
        return AbVerdict.drop()
    state.queue(pkt.priority).append(pkt)
    return AbVerdict(enqueued=True, priority=pkt.priority)


def _other(priority: Priority) -> Priority:
    if priority is Priority.ACCEPTED:
        return Priority.DEGRADED
    return Priority.ACCEPTED


def ab_schedule_next(state: AdditionalBufferState) -> Packet | None:
    accepted, degraded = state.accepted_queue, state.degraded_queue
    if not accepted and not degraded:
        return None
    # work conserving: a lone backlogged class is served directly, an idle
    # class keeps no credit
    if not degraded:
        state.deficit[Priority.DEGRADED] = 0.0
        return accepted.popleft()
    if not accepted:
        state.deficit[Priority.ACCEPTED] = 0.0
        return degraded.popleft()
    while True:
        current = state.turn
        queue = state.queue(current)
        head = queue[0]
        if head.size_bytes <= state.deficit[current]:
            state.deficit[current] -= head.size_bytes
            return queue.popleft()
        state.turn = _other(current)
        state.deficit[state.turn] += state.quantum(state.turn)


class AdditionalBufferMeter(Meter):
    technique = Technique.AB
    owns_buffer = True

    def __init__(self, state: AdditionalBufferState):
        self.state = state

    def on_arrival(self, packet: Packet, now: SimTime,
                   queue_len: int) -> MeterDecision:
        verdict = ab_on_arrival(self.state, packet, now)
        if not verdict.enqueued:
            return MeterDecision.DROP
        if verdict.priority is Priority.DEGRADED:
            return MeterDecision.MARK
        return MeterDecision.FORWARD

    def schedule_next(self) -> Packet | None:
        return ab_schedule_next(self.state)

    def __len__(self) -> int:
        return len(self.state)

    def describe(self) -> dict[str, float]:
        return {
            'ab_threshold_rate_bps': self.state.tr,
            'ab_wd': self.state.wd,
            'ab_wb': self.state.wb,
            'ab_buffer_capacity': self.state.buffer_capacity,
        }

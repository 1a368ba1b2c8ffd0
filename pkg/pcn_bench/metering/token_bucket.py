"""
Aggregate token bucket, in bytes. Tokens accrue continuously at fill_rate and
are computed lazily on access; arrivals remove their size. Packets are marked
while the bucket holds fewer tokens than mark_threshold.
"""
from dataclasses import dataclass

from pcn_bench.helpers.constants import Technique
from pcn_bench.helpers.exceptions import (
    PcnBenchBadRequestException, PcnBenchInternalException,
)
from pcn_bench.metering.base import Meter
from pcn_bench.models import MeterDecision, Packet, SimTime
from pcn_bench.models.sim_time import ZERO, elapsed_seconds


@dataclass(slots=True)
class TokenBucketState:
    capacity: float
    fill_rate: float
    mark_threshold: float
    # the bucket starts empty
    tokens: float = 0.0
    last_refill: SimTime = ZERO
    # burst length L and generating rate G, kept for reference only
    burst_length: float | None = None
    generating_rate: float | None = None

    def __post_init__(self):
        if self.capacity <= 0 or self.fill_rate <= 0:
            raise PcnBenchBadRequestException(
                f'Token bucket capacity and fill rate must be positive. '
                f'Given capacity={self.capacity}, fill_rate={self.fill_rate}')
        if not 0 <= self.mark_threshold <= self.capacity:
            raise PcnBenchBadRequestException(
                f'Token bucket threshold must be in [0, {self.capacity}]. '
                f'Given value: {self.mark_threshold}')
        if not 0 <= self.tokens <= self.capacity:
            raise PcnBenchBadRequestException(
                f'Initial tokens must be in [0, {self.capacity}]. '
                f'Given value: {self.tokens}')


def tb_refill(state: TokenBucketState, now: SimTime) -> TokenBucketState:
    if now < state.last_refill:
        raise PcnBenchInternalException(
            f'Token bucket refilled at {now} us before its last refill at '
            f'{state.last_refill} us')
    elapsed = elapsed_seconds(state.last_refill, now)
    state.tokens = min(state.capacity,
                       state.tokens + state.fill_rate * elapsed)
    state.last_refill = now
    return state


def tb_on_arrival(state: TokenBucketState, pkt: Packet,
                  now: SimTime) -> MeterDecision:
    tb_refill(state, now)
    state.tokens = max(0.0, state.tokens - pkt.size_bytes)
    if state.tokens < state.mark_threshold:
        return MeterDecision.MARK
    return MeterDecision.FORWARD


class TokenBucketMeter(Meter):
    technique = Technique.TB

    def __init__(self, state: TokenBucketState):
        self.state = state

    def on_arrival(self, packet: Packet, now: SimTime,
                   queue_len: int) -> MeterDecision:
        return tb_on_arrival(self.state, packet, now)

    def describe(self) -> dict[str, float]:
        return {
            'tb_capacity_bytes': self.state.capacity,
            'tb_fill_rate_Bps': self.state.fill_rate,
            'tb_mark_threshold_bytes': self.state.mark_threshold,
        }

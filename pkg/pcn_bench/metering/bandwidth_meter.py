"""
Sliding-window bandwidth meter. The window is half-open, (now - mi, now]:
a record exactly mi old no longer counts.
"""
from collections import deque
from dataclasses import dataclass, field

from pcn_bench.helpers.constants import BITS_PER_BYTE, Technique
from pcn_bench.helpers.exceptions import (
    PcnBenchBadRequestException, PcnBenchInternalException,
)
from pcn_bench.metering.base import Meter
from pcn_bench.models import MeterDecision, Packet, SimTime
from pcn_bench.models.sim_time import from_seconds


@dataclass(slots=True)
class BandwidthMeterState:
    mi: float
    b_thr: float
    window: deque[tuple[SimTime, int]] = field(default_factory=deque)
    window_bytes: int = 0
    mi_us: int = field(init=False)

    def __post_init__(self):
        if self.mi <= 0:
            raise PcnBenchBadRequestException(
                f'Measurement interval must be positive. Given value: '
                f'{self.mi}')
        self.mi_us = from_seconds(self.mi)
        if self.mi_us == 0:
            raise PcnBenchBadRequestException(
                f'Measurement interval {self.mi} s is below 1 us resolution')


def bm_record(state: BandwidthMeterState, now: SimTime,
              size_bytes: int) -> None:
    if state.window and now < state.window[-1][0]:
        raise PcnBenchInternalException(
            f'Bandwidth record at {now} us precedes the newest record at '
            f'{state.window[-1][0]} us')
    state.window.append((now, size_bytes))
    state.window_bytes += size_bytes


def bm_measure(state: BandwidthMeterState, now: SimTime) -> float:
    """
    Returns bits/second over the last mi seconds
    """
    horizon = now - state.mi_us
    window = state.window
    while window and window[0][0] <= horizon:
        _, size = window.popleft()
        state.window_bytes -= size
    return state.window_bytes * BITS_PER_BYTE / state.mi


def bm_on_arrival(state: BandwidthMeterState, pkt: Packet,
                  now: SimTime) -> MeterDecision:
    bm_record(state, now, pkt.size_bytes)
    if bm_measure(state, now) > state.b_thr:
        return MeterDecision.MARK
    return MeterDecision.FORWARD


class BandwidthMeter(Meter):
    technique = Technique.BM

    def __init__(self, state: BandwidthMeterState):
        self.state = state

    def on_arrival(self, packet: Packet, now: SimTime,
                   queue_len: int) -> MeterDecision:
        return bm_on_arrival(self.state, packet, now)

    def describe(self) -> dict[str, float]:
        return {
            'bm_mi_s': self.state.mi,
            'bm_threshold_bps': self.state.b_thr,
        }

"""
Random Early Detection over the link's queue length in packets.

avg is an EWMA of the instantaneous queue. Below min_thr nothing is marked,
at or above max_thr every arrival is marked, in between an arrival is marked
with probability P_A = P_p / (1 - count * P_p) where P_p grows linearly from
0 to max_p and count is the number of packets since the last mark.
"""
import random
from dataclasses import dataclass

from pcn_bench.helpers.constants import (
    DEFAULT_RED_MAX_P, DEFAULT_RED_MAX_THR, DEFAULT_RED_MIN_THR,
    DEFAULT_RED_W_Q, Technique,
)
from pcn_bench.helpers.exceptions import PcnBenchBadRequestException
from pcn_bench.metering.base import Meter
from pcn_bench.models import MeterDecision, Packet, SimTime


@dataclass(slots=True)
class RedState:
    min_thr: float = DEFAULT_RED_MIN_THR
    max_thr: float = DEFAULT_RED_MAX_THR
    max_p: float = DEFAULT_RED_MAX_P
    w_q: float = DEFAULT_RED_W_Q
    avg: float = 0.0
    count: int = -1

    def __post_init__(self):
        if not 0 < self.min_thr < self.max_thr:
            raise PcnBenchBadRequestException(
                f'RED thresholds must satisfy 0 < min_thr < max_thr. Given '
                f'min_thr={self.min_thr}, max_thr={self.max_thr}')
        if not 0 < self.max_p <= 1:
            raise PcnBenchBadRequestException(
                f'RED max_p must be in (0, 1]. Given value: {self.max_p}')
        if not 0 < self.w_q <= 1:
            raise PcnBenchBadRequestException(
                f'RED w_q must be in (0, 1]. Given value: {self.w_q}')


def red_update_avg(state: RedState, instantaneous_queue: float) -> float:
    if instantaneous_queue < 0:
        raise PcnBenchBadRequestException(
            f'Queue length can not be negative: {instantaneous_queue}')
    state.avg = (1 - state.w_q) * state.avg + state.w_q * instantaneous_queue
    return state.avg


def red_base_probability(state: RedState) -> float:
    """
    P_p, linear in avg between the thresholds
    """
    return state.max_p * (state.avg - state.min_thr) / (
            state.max_thr - state.min_thr)


def red_marking_probability(state: RedState) -> float:
    p_p = red_base_probability(state)
    spent = state.count * p_p
    if spent >= 1:
        return 1.0
    return min(1.0, max(0.0, p_p / (1 - spent)))


def red_on_arrival(state: RedState, pkt: Packet, queue_len: int,
                   rng: random.Random) -> MeterDecision:
    red_update_avg(state, queue_len)
    if state.avg < state.min_thr:
        state.count = -1
        return MeterDecision.FORWARD
    if state.avg >= state.max_thr:
        state.count = 0
        return MeterDecision.MARK
    state.count += 1
    if rng.random() < red_marking_probability(state):
        state.count = 0
        return MeterDecision.MARK
    return MeterDecision.FORWARD


class RedMeter(Meter):
    technique = Technique.RED

    def __init__(self, state: RedState, rng: random.Random):
        self.state = state
        self._rng = rng

    def on_arrival(self, packet: Packet, now: SimTime,
                   queue_len: int) -> MeterDecision:
        return red_on_arrival(self.state, packet, queue_len, self._rng)

    def describe(self) -> dict[str, float]:
        return {
            'red_min_thr': self.state.min_thr,
            'red_max_thr': self.state.max_thr,
            'red_max_p': self.state.max_p,
            'red_w_q': self.state.w_q,
        }

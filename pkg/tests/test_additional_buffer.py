import random

import pytest

from pcn_bench.helpers.exceptions import PcnBenchBadRequestException
from pcn_bench.metering import (
    AdditionalBufferMeter, AdditionalBufferState, BandwidthMeterState,
    ab_compute_threshold, ab_on_arrival, ab_schedule_next, ab_weights,
)
from pcn_bench.models import MeterDecision, Packet, Priority
from pcn_bench.models.sim_time import from_seconds


@pytest.mark.parametrize('ar, or_, tr', [
    (100, 100, 100),
    (60_000_000, 100_000_000, 80_000_000),
    (0, 100, 50),
    (60, 100, 80),
])
def test_threshold_is_midpoint(ar, or_, tr):
    assert ab_compute_threshold(ar, or_) == tr


def test_threshold_rejects_ar_above_or():
    with pytest.raises(PcnBenchBadRequestException):
        ab_compute_threshold(101, 100)


def test_weights_worked_values():
    assert ab_weights(100, 100) == (0.0, 1.0)
    wd, wb = ab_weights(80, 100)
    assert wd == pytest.approx(0.2)
    assert wb == pytest.approx(0.8)


def test_weights_sum_to_one():
    rng = random.Random(11)
    for _ in range(1_000):
        or_ = rng.uniform(1, 1e9)
        ar = rng.uniform(0, or_)
        wd, wb = ab_weights(ab_compute_threshold(ar, or_), or_)
        assert wd + wb == 1.0
        assert 0 <= wd <= 1 and 0 <= wb <= 1


@pytest.mark.parametrize('tr, or_', [(0, 100), (101, 100), (50, 0)])
def test_weights_validation(tr, or_):
    with pytest.raises(PcnBenchBadRequestException):
        ab_weights(tr, or_)


def state_for(tr: float = 1_000_000, capacity: int = 50, wb: float = 0.8
              ) -> AdditionalBufferState:
    return AdditionalBufferState(
        tr=tr, wd=1 - wb, wb=wb, buffer_capacity=capacity,
        rate_estimator=BandwidthMeterState(mi=0.1, b_thr=tr),
    )


def test_low_rate_is_accepted():
    state = state_for()
    packet = Packet(id=1, flow_id=1)
    verdict = ab_on_arrival(state, packet, from_seconds(1))
    assert verdict.enqueued
    assert verdict.priority is Priority.ACCEPTED
    assert not packet.pcn_marked
    assert list(state.accepted_queue) == [packet]


def test_high_rate_is_degraded_and_marked():
    # one 1040 B packet in 0.1 s is 83,200 bits/s
    state = state_for(tr=50_000)
    packet = Packet(id=1, flow_id=1)
    verdict = ab_on_arrival(state, packet, from_seconds(1))
    assert verdict.priority is Priority.DEGRADED
    assert packet.pcn_marked
    assert list(state.degraded_queue) == [packet]


def test_full_buffer_drops():
    state = state_for(capacity=2)
    now = from_seconds(1)
    for i in range(2):
        assert ab_on_arrival(state, Packet(id=i, flow_id=1), now).enqueued
    assert not ab_on_arrival(state, Packet(id=3, flow_id=1), now).enqueued
    assert len(state) == 2


def test_schedule_empty_and_single_class():
    state = state_for()
    assert ab_schedule_next(state) is None
    first, second = Packet(id=1, flow_id=1), Packet(id=2, flow_id=1)
    state.accepted_queue.extend((first, second))
    assert ab_schedule_next(state) is first
    assert ab_schedule_next(state) is second
    assert ab_schedule_next(state) is None


def test_schedule_share_follows_weights():
    state = state_for(capacity=10_000)
    for i in range(2_000):
        state.accepted_queue.append(
            Packet(id=i, flow_id=1, priority=Priority.ACCEPTED))
        state.degraded_queue.append(
            Packet(id=i, flow_id=2, priority=Priority.DEGRADED))
    served = [ab_schedule_next(state) for _ in range(1_000)]
    accepted = sum(p.priority is Priority.ACCEPTED for p in served)
    assert accepted / 1_000 == pytest.approx(0.8, abs=0.02)


def test_meter_maps_verdicts():
    meter = AdditionalBufferMeter(state_for(tr=50_000, capacity=1))
    now = from_seconds(1)
    assert meter.owns_buffer
    assert meter.on_arrival(Packet(id=1, flow_id=1), now,
                            0) is MeterDecision.MARK
    assert meter.on_arrival(Packet(id=2, flow_id=1), now,
                            0) is MeterDecision.DROP
    assert len(meter) == 1
    assert meter.schedule_next().id == 1
    assert len(meter) == 0


def test_state_for_rates():
    state = AdditionalBufferState.for_rates(
        admissible_rate=60, objective_rate=100, buffer_capacity=50, mi=0.1)
    assert state.tr == 80
    assert state.wd + state.wb == 1.0

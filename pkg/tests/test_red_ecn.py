import random

import pytest

from pcn_bench.helpers.exceptions import PcnBenchBadRequestException
from pcn_bench.metering import (
    EcnMeter, RedMeter, RedState, ecn_on_arrival, red_base_probability,
    red_marking_probability, red_on_arrival, red_update_avg,
)
from pcn_bench.models import EcnCodepoint, MeterDecision, Packet


class PinnedRng:
    """
    random.Random stand-in returning one fixed draw
    """

    def __init__(self, value: float):
        self.value = value

    def random(self) -> float:
        return self.value


@pytest.mark.parametrize('avg, q, w_q, expected', [
    (0.0, 0, 0.002, 0.0),
    (10.0, 10, 0.3, 10.0),
    (0.0, 10, 0.5, 5.0),
])
def test_red_update_avg(avg, q, w_q, expected):
    state = RedState(w_q=w_q, avg=avg)
    assert red_update_avg(state, q) == pytest.approx(expected)


def test_red_update_avg_rejects_negative_queue():
    with pytest.raises(PcnBenchBadRequestException):
        red_update_avg(RedState(), -1)


def test_red_probability_at_boundaries():
    state = RedState(min_thr=5, max_thr=15, max_p=0.1, avg=5, count=5)
    assert red_base_probability(state) == 0
    assert red_marking_probability(state) == 0
    state.avg = 15 - 1e-12
    assert red_base_probability(state) == pytest.approx(0.1)


def test_red_probability_worked_values():
    state = RedState(min_thr=5, max_thr=15, max_p=0.1, avg=10, count=0)
    assert red_base_probability(state) == pytest.approx(0.05)
    assert red_marking_probability(state) == pytest.approx(0.05)
    state.count = 5
    assert red_marking_probability(state) == pytest.approx(0.05 / 0.75,
                                                           abs=1e-9)


def test_red_probability_is_clamped():
    state = RedState(min_thr=5, max_thr=15, max_p=0.1, avg=10, count=40)
    assert red_marking_probability(state) == 1.0


def test_red_forwards_below_min_threshold():
    state = RedState(w_q=1.0)
    rng = random.Random(1)
    for _ in range(1000):
        assert red_on_arrival(state, Packet(id=1, flow_id=1), 4,
                              rng) is MeterDecision.FORWARD
    assert state.count == -1


def test_red_marks_at_max_threshold():
    state = RedState(w_q=1.0)
    rng = random.Random(1)
    for _ in range(1000):
        assert red_on_arrival(state, Packet(id=1, flow_id=1), 15,
                              rng) is MeterDecision.MARK
    assert state.count == 0


def test_red_mark_fraction_matches_probability():
    rng = random.Random(42)
    marks = 0
    trials = 10_000
    for _ in range(trials):
        # avg pinned at 10 and count at 0 gives P_A = 0.05
        state = RedState(min_thr=5, max_thr=15, max_p=0.1, w_q=1.0,
                         avg=10, count=-1)
        if red_on_arrival(state, Packet(id=1, flow_id=1), 10,
                          rng) is MeterDecision.MARK:
            marks += 1
    assert marks / trials == pytest.approx(0.05, abs=0.01)


def test_red_count_resets_on_mark():
    state = RedState(w_q=1.0)
    packet = Packet(id=1, flow_id=1)
    red_on_arrival(state, packet, 10, PinnedRng(0.99))
    red_on_arrival(state, packet, 10, PinnedRng(0.99))
    assert state.count == 1
    assert red_on_arrival(state, packet, 10,
                          PinnedRng(0.0)) is MeterDecision.MARK
    assert state.count == 0


@pytest.mark.parametrize('kwargs', [
    {'min_thr': 15, 'max_thr': 5},
    {'min_thr': 0},
    {'max_p': 0},
    {'max_p': 1.5},
    {'w_q': 0},
])
def test_red_state_validation(kwargs):
    with pytest.raises(PcnBenchBadRequestException):
        RedState(**kwargs)


def test_ecn_mark_becomes_ce():
    state = RedState(w_q=1.0)
    packet = Packet(id=1, flow_id=1, codepoint=EcnCodepoint.ECT0)
    decision, out = ecn_on_arrival(state, packet, 20, random.Random(1))
    assert decision is MeterDecision.MARK
    assert out.codepoint is EcnCodepoint.CE


def test_ecn_mark_on_legacy_packet_is_a_drop():
    state = RedState(w_q=1.0)
    packet = Packet(id=1, flow_id=1, codepoint=EcnCodepoint.NOT_ECT)
    decision, out = ecn_on_arrival(state, packet, 20, random.Random(1))
    assert decision is MeterDecision.DROP
    assert out.codepoint is EcnCodepoint.NOT_ECT


def test_ecn_forward_leaves_packet_alone():
    state = RedState(w_q=1.0)
    packet = Packet(id=1, flow_id=1, codepoint=EcnCodepoint.ECT1)
    decision, out = ecn_on_arrival(state, packet, 0, random.Random(1))
    assert decision is MeterDecision.FORWARD
    assert out.codepoint is EcnCodepoint.ECT1
    assert not out.pcn_marked


def test_meters_describe_parameters():
    rng = random.Random(1)
    assert RedMeter(RedState(), rng).describe()['red_min_thr'] == 5.0
    meter = EcnMeter(RedState(), rng)
    assert meter.technique.value == 'ecn'
    assert not meter.owns_buffer
    assert len(meter) == 0

import math
import random

import pytest

from pcn_bench.helpers.exceptions import PcnBenchBadRequestException
from pcn_bench.simulation import (
    FeedbackKind, SenderModel, aimd_on_feedback, optimal_window,
)


def test_optimal_window_worked_value():
    assert optimal_window(8_320, 1, 1040) == 2


def test_optimal_window_floors_at_one_packet():
    assert optimal_window(100, 0.001, 1040) == 1


def test_optimal_window_matches_direct_evaluation():
    rng = random.Random(17)
    for _ in range(100):
        b = rng.uniform(1e3, 1e9)
        dp = rng.uniform(1e-3, 1)
        expected = max(1, math.floor(2 * b * dp / (8 * 1040)))
        assert optimal_window(b, dp, 1040) == expected


def test_optimal_window_rejects_non_positive_inputs():
    with pytest.raises(PcnBenchBadRequestException):
        optimal_window(0, 1, 1040)
    with pytest.raises(PcnBenchBadRequestException):
        optimal_window(1000, 0, 1040)


def sender(window: float) -> SenderModel:
    # cap: 2 * 10 Mbps * 20 ms / 8320 bits = 48 packets
    return SenderModel(bandwidth_bps=10_000_000, delay_product=0.02,
                       packet_size=1040, window=window)


def test_loss_halves_window():
    s = sender(10)
    assert aimd_on_feedback(s, FeedbackKind.LOSS) == 5


def test_mark_echo_halves_window():
    s = sender(10)
    assert aimd_on_feedback(s, FeedbackKind.MARK_ECHO) == 5


def test_window_never_below_one():
    s = sender(1)
    assert aimd_on_feedback(s, FeedbackKind.LOSS) == 1


def test_ack_grows_by_reciprocal_and_stops_at_cap():
    s = sender(4)
    assert aimd_on_feedback(s, FeedbackKind.ACK) == pytest.approx(4.25)
    s = sender(48)
    assert s.cap == 48
    assert aimd_on_feedback(s, FeedbackKind.ACK) == 48


def test_initial_window_is_capped():
    assert sender(1_000).window == 48
    with pytest.raises(PcnBenchBadRequestException):
        sender(0.5)

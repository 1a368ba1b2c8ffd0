"""
Simplified window-based sender. Not a TCP implementation: the window grows
by 1/window per acknowledgment, halves on a CE echo or a loss, and never
leaves [1, optimal window].
"""
import math
from dataclasses import dataclass
from enum import Enum

from pcn_bench.helpers.constants import (
    AIMD_DECREASE_FACTOR, BITS_PER_BYTE, MIN_WINDOW, SenderMode,
)
from pcn_bench.helpers.exceptions import PcnBenchBadRequestException


class FeedbackKind(str, Enum):
    ACK = 'Ack'
    MARK_ECHO = 'MarkEcho'
    LOSS = 'Loss'


def optimal_window_bits(bandwidth_bps: float, delay_product: float) -> float:
    """
    2 * B * DP, before conversion to packets
    """
    if bandwidth_bps <= 0 or delay_product <= 0:
        raise PcnBenchBadRequestException(
            f'Bandwidth and delay product must be positive. Given '
            f'B={bandwidth_bps}, DP={delay_product}')
    return 2 * bandwidth_bps * delay_product


def optimal_window(bandwidth_bps: float, delay_product: float,
                   packet_size: int) -> int:
    """
    Window cap in whole packets, at least one
    """
    bits = optimal_window_bits(bandwidth_bps, delay_product)
    return max(int(MIN_WINDOW),
               math.floor(bits / (BITS_PER_BYTE * packet_size)))


@dataclass(slots=True)
class SenderModel:
    bandwidth_bps: float
    delay_product: float
    packet_size: int
    mode: SenderMode = SenderMode.AIMD
    window: float = MIN_WINDOW

    def __post_init__(self):
        if self.window < MIN_WINDOW:
            raise PcnBenchBadRequestException(
                f'Window can not be below {MIN_WINDOW}. Given value: '
                f'{self.window}')
        self.window = min(self.window, self.cap)

    @property
    def cap(self) -> int:
        return optimal_window(self.bandwidth_bps, self.delay_product,
                              self.packet_size)


def aimd_on_feedback(sender: SenderModel, signal: FeedbackKind) -> float:
    if signal is FeedbackKind.ACK:
        window = sender.window + 1 / sender.window
    else:
        window = sender.window * AIMD_DECREASE_FACTOR
    sender.window = min(float(sender.cap), max(MIN_WINDOW, window))
    return sender.window

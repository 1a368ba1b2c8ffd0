from dataclasses import dataclass
from enum import Enum

from pcn_bench.helpers.constants import DEFAULT_PACKET_SIZE, HEADER_SIZE
from pcn_bench.helpers.exceptions import (
    PcnBenchBadRequestException, PcnBenchConflictException,
)
from pcn_bench.models.sim_time import SimTime, ZERO


class EcnCodepoint(str, Enum):
    NOT_ECT = '00'
    ECT0 = '10'
    ECT1 = '01'
    CE = '11'


class EcnClass(str, Enum):
    ECN_CAPABLE = 'EcnCapable'
    NOT_ECN_CAPABLE = 'NotEcnCapable'
    CONGESTION_EXPERIENCED = 'CongestionExperienced'


_CODEPOINT_CLASS = {
    EcnCodepoint.NOT_ECT: EcnClass.NOT_ECN_CAPABLE,
    EcnCodepoint.ECT0: EcnClass.ECN_CAPABLE,
    EcnCodepoint.ECT1: EcnClass.ECN_CAPABLE,
    EcnCodepoint.CE: EcnClass.CONGESTION_EXPERIENCED,
}


def to_codepoint(bits: str | int | EcnCodepoint) -> EcnCodepoint:
    """
    Accepts the codepoint itself, its bit string ('10') or the integer value
    of the two bits (0b10)
    """
    if isinstance(bits, EcnCodepoint):
        return bits
    if isinstance(bits, int) and not isinstance(bits, bool):
        if 0 <= bits <= 0b11:
            return EcnCodepoint(format(bits, '02b'))
    elif isinstance(bits, str):
        try:
            return EcnCodepoint(bits)
        except ValueError:
            pass
    raise PcnBenchBadRequestException(
        f'Invalid ECN codepoint: {bits!r}. Allowed values: '
        f'{", ".join(c.value for c in EcnCodepoint)}')


def classify_codepoint(bits: str | int | EcnCodepoint) -> EcnClass:
    return _CODEPOINT_CLASS[to_codepoint(bits)]


class Priority(str, Enum):
    ACCEPTED = 'Accepted'
    DEGRADED = 'Degraded'


@dataclass(slots=True, eq=False)
class Packet:
    id: int
    flow_id: int
    size_bytes: int = DEFAULT_PACKET_SIZE
    codepoint: EcnCodepoint = EcnCodepoint.ECT0
    pcn_marked: bool = False
    priority: Priority = Priority.ACCEPTED
    created_at: SimTime = ZERO
    # set by the sender, used to echo marks back and measure RTT
    sent_at: SimTime = ZERO
    link_index: int = 0

    def __post_init__(self):
        if self.size_bytes < HEADER_SIZE:
            raise PcnBenchBadRequestException(
                f'Packet size {self.size_bytes} B is smaller than the '
                f'{HEADER_SIZE} B header')

    @property
    def ecn_class(self) -> EcnClass:
        return _CODEPOINT_CLASS[self.codepoint]

    def mark_pcn(self) -> None:
        """
        Marks are never cleared inside the domain, marking twice is a no-op
        """
        self.pcn_marked = True

    def set_congestion_experienced(self) -> None:
        if self.codepoint is EcnCodepoint.NOT_ECT:
            raise PcnBenchConflictException(
                f'Packet {self.id} is not ECN capable, CE can not be set')
        self.codepoint = EcnCodepoint.CE

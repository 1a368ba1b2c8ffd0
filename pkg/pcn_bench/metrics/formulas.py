from fractions import Fraction

from pcn_bench.helpers.constants import BITS_PER_BYTE
from pcn_bench.helpers.exceptions import PcnBenchBadRequestException


def throughput(buf_size: float, rtt: float) -> float:
    """
    Bytes received per round trip, in bits/second
    """
    if rtt <= 0:
        raise PcnBenchBadRequestException(
            f'Round trip time must be positive. Given value: {rtt}')
    if buf_size < 0:
        raise PcnBenchBadRequestException(
            f'Buffer size can not be negative. Given value: {buf_size}')
    return buf_size * BITS_PER_BYTE / rtt


def loss_stats(tsp: int, tap: int) -> tuple[int, float]:
    """
    Returns (lost packets, drop rate in percent). An empty run has a zero
    drop rate
    """
    if tap < 0 or tsp < 0:
        raise PcnBenchBadRequestException(
            f'Packet counts can not be negative. Given tsp={tsp}, tap={tap}')
    if tap > tsp:
        raise PcnBenchBadRequestException(
            f'Acknowledged packets ({tap}) exceed sent packets ({tsp})')
    lp = tsp - tap
    if tsp == 0:
        return lp, 0.0
    return lp, float(Fraction(lp * 100, tsp))

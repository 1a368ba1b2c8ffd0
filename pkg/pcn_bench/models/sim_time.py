"""
Simulated time is an integer count of microseconds. Integer arithmetic keeps
event ordering exact: two schedulings of the same instant compare equal.
"""
from fractions import Fraction
from typing import NewType

from pcn_bench.helpers.constants import MICROS_PER_SECOND
from pcn_bench.helpers.exceptions import PcnBenchBadRequestException

SimTime = NewType('SimTime', int)

ZERO = SimTime(0)


def from_seconds(seconds: float | Fraction) -> SimTime:
    """
    Rounds to the nearest microsecond
    """
    if seconds < 0:
        raise PcnBenchBadRequestException(
            f'Simulated time can not be negative: {seconds}')
    return SimTime(int(round(Fraction(seconds) * MICROS_PER_SECOND)))


def to_seconds(time: SimTime | int) -> float:
    return time / MICROS_PER_SECOND


def elapsed_seconds(start: SimTime, end: SimTime) -> float:
    return (end - start) / MICROS_PER_SECOND

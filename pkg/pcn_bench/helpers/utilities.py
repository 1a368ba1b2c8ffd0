import re

from pcn_bench.helpers.exceptions import PcnBenchBadRequestException

_BANDWIDTH_RE = re.compile(
    r'^\s*(?P<number>(\d+(\.\d*)?|\.\d+)([eE][-+]?\d+)?)\s*(?P<unit>[kmg]?bps)?\s*$',
    re.IGNORECASE
)
_BANDWIDTH_UNITS = {
    None: 1,
    'bps': 1,
    'kbps': 1_000,
    'mbps': 1_000_000,
    'gbps': 1_000_000_000,
}
_DURATION_RE = re.compile(
    r'^\s*(?P<number>(\d+(\.\d*)?|\.\d+)([eE][-+]?\d+)?)\s*(?P<unit>ms|s)?\s*$',
    re.IGNORECASE
)


class SingletonMeta(type):
    _instances = {}

    def __call__(cls, *args, **kwargs):
        if cls not in cls._instances:
            instance = super().__call__(*args, **kwargs)
            cls._instances[cls] = instance
        return cls._instances[cls]


def parse_bandwidth(value: str | int | float) -> int:
    """
    Converts a bandwidth literal to bits/second. Accepts plain numbers and
    kbps/mbps/gbps suffixes: '50mbps' -> 50_000_000
    """
    if isinstance(value, (int, float)):
        bps = value
    else:
        match = _BANDWIDTH_RE.match(value)
        if not match:
            raise PcnBenchBadRequestException(
                f'Invalid bandwidth: \'{value}\'. Expected a number with an '
                f'optional bps/kbps/mbps/gbps suffix, e.g. 50mbps')
        unit = match.group('unit')
        bps = float(match.group('number')) * _BANDWIDTH_UNITS[
            unit.lower() if unit else None]
    if bps <= 0:
        raise PcnBenchBadRequestException(
            f'Bandwidth must be positive. Given value: {value}')
    return int(round(bps))


def parse_duration(value: str | int | float) -> float:
    """
    Converts a duration literal to seconds: '100ms' -> 0.1, '60' -> 60.0
    """
    if isinstance(value, (int, float)):
        seconds = float(value)
    else:
        match = _DURATION_RE.match(value)
        if not match:
            raise PcnBenchBadRequestException(
                f'Invalid duration: \'{value}\'. Expected seconds with an '
                f'optional s/ms suffix, e.g. 60 or 100ms')
        seconds = float(match.group('number'))
        if (match.group('unit') or '').lower() == 'ms':
            seconds /= 1000
    if seconds < 0:
        raise PcnBenchBadRequestException(
            f'Duration can not be negative. Given value: {value}')
    return seconds


def parse_seeds(value: str) -> list[int]:
    """
    '1,2,3' -> [1, 2, 3]; '1-5' -> [1, 2, 3, 4, 5]
    """
    seeds = []
    for token in filter(None, (t.strip() for t in value.split(','))):
        try:
            if '-' in token[1:]:
                lo, hi = token.split('-', maxsplit=1)
                seeds.extend(range(int(lo), int(hi) + 1))
            else:
                seeds.append(int(token))
        except ValueError:
            raise PcnBenchBadRequestException(
                f'Invalid seed: \'{token}\'. Expected integers separated by '
                f'commas or a range like 1-5')
    if not seeds:
        raise PcnBenchBadRequestException('At least one seed is required')
    return seeds

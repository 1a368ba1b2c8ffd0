"""
Scenario configuration: every tunable of a run, its default, and its
parsing from flat key=value text.
"""
import dataclasses
from dataclasses import dataclass
from typing import Any, Callable, Mapping

from typing_extensions import Self

from pcn_bench.helpers import constants as c
from pcn_bench.helpers.constants import (
    SenderMode, Technique, TerminationPolicy,
)
from pcn_bench.helpers.exceptions import PcnBenchBadRequestException
from pcn_bench.helpers.log_helper import get_logger
from pcn_bench.helpers.utilities import parse_bandwidth, parse_duration

_LOG = get_logger(__name__)


def _enum_parser(enum_cls) -> Callable[[Any], Any]:
    def parse(value):
        if isinstance(value, enum_cls):
            return value
        try:
            return enum_cls(str(value).strip().lower())
        except ValueError:
            raise PcnBenchBadRequestException(
                f'Invalid value \'{value}\'. Allowed values: '
                f'{", ".join(m.value for m in enum_cls)}')
    return parse


def _int(value) -> int:
    if isinstance(value, int) and not isinstance(value, bool):
        return value
    try:
        return int(str(value).strip())
    except ValueError:
        raise PcnBenchBadRequestException(
            f'Invalid integer: \'{value}\'')


def _float(value) -> float:
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return float(value)
    try:
        return float(str(value).strip())
    except ValueError:
        raise PcnBenchBadRequestException(f'Invalid number: \'{value}\'')


@dataclass(frozen=True)
class ScenarioConfig:
    technique: Technique = c.DEFAULT_TECHNIQUE
    bandwidth_bps: int = c.DEFAULT_BANDWIDTH_BPS
    n_links: int = c.DEFAULT_N_LINKS
    n_connections: int = c.DEFAULT_N_CONNECTIONS
    packet_rate: float = c.DEFAULT_PACKET_RATE
    packet_size: int = c.DEFAULT_PACKET_SIZE
    duration: float = c.DEFAULT_DURATION
    pause_interval: float = c.DEFAULT_PAUSE_INTERVAL
    pause_length: float = c.DEFAULT_PAUSE_LENGTH
    seed: int = c.DEFAULT_SEED
    sender_mode: SenderMode = c.DEFAULT_SENDER_MODE
    ect_fraction: float = c.DEFAULT_ECT_FRACTION
    ar_fraction: float = c.DEFAULT_AR_FRACTION
    sr_fraction: float = c.DEFAULT_SR_FRACTION
    or_fraction: float = c.DEFAULT_OR_FRACTION
    prop_delay: float = c.DEFAULT_PROP_DELAY
    queue_limit: int = c.DEFAULT_QUEUE_LIMIT
    pcn_share: float = c.DEFAULT_PCN_SHARE
    session_rate: float = c.DEFAULT_SESSION_RATE
    holding_time: float = c.DEFAULT_HOLDING_TIME
    cle_w: float = c.DEFAULT_CLE_W
    admit_threshold: float = c.DEFAULT_ADMIT_THRESHOLD
    feedback_delay: float = c.DEFAULT_FEEDBACK_DELAY
    termination_policy: TerminationPolicy = TerminationPolicy.NEWEST_FIRST
    measure_interval: float = c.DEFAULT_MEASURE_INTERVAL
    red_w_q: float = c.DEFAULT_RED_W_Q
    red_min_thr: float = c.DEFAULT_RED_MIN_THR
    red_max_thr: float = c.DEFAULT_RED_MAX_THR
    red_max_p: float = c.DEFAULT_RED_MAX_P
    tb_depth: float = c.DEFAULT_TB_DEPTH
    tb_threshold_fraction: float = c.DEFAULT_TB_THRESHOLD_FRACTION
    tb_rate_fraction: float = c.DEFAULT_TB_RATE_FRACTION
    bm_mi: float = c.DEFAULT_BM_MI
    bm_threshold_fraction: float = c.DEFAULT_BM_THRESHOLD_FRACTION
    ab_buffer_capacity: int = c.DEFAULT_AB_BUFFER_CAPACITY

    def __post_init__(self):
        for name in ('bandwidth_bps', 'n_links', 'packet_rate', 'packet_size',
                     'queue_limit', 'holding_time', 'measure_interval',
                     'red_w_q', 'red_max_p', 'tb_depth', 'bm_mi',
                     'ab_buffer_capacity', 'prop_delay', 'pcn_share',
                     'tb_rate_fraction'):
            if getattr(self, name) <= 0:
                self._reject(f'{name} must be positive')
        for name in ('duration', 'pause_interval', 'pause_length',
                     'n_connections', 'session_rate', 'feedback_delay',
                     'tb_threshold_fraction'):
            if getattr(self, name) < 0:
                self._reject(f'{name} can not be negative')
        if self.packet_size < c.HEADER_SIZE:
            self._reject(f'packet_size must be at least {c.HEADER_SIZE} B')
        if not 0 < self.ar_fraction <= self.sr_fraction <= 1:
            self._reject('fractions must satisfy 0 < ar <= sr <= 1')
        if not self.ar_fraction <= self.or_fraction <= 1:
            self._reject('fractions must satisfy ar <= or <= 1')
        if not 0 < self.cle_w < 1:
            self._reject('cle_w must be in (0, 1)')
        if not 0 < self.admit_threshold < 1:
            self._reject('admit_threshold must be in (0, 1)')
        if not 0 < self.red_min_thr < self.red_max_thr:
            self._reject('red thresholds must satisfy 0 < min < max')
        if self.tb_threshold_fraction > 1:
            self._reject('tb_threshold_fraction can not exceed 1')
        if self.bm_threshold_fraction <= 0:
            self._reject('bm_threshold_fraction must be positive')
        if self.pcn_share > 1:
            self._reject('pcn_share can not exceed 1')
        if not 0 <= self.ect_fraction <= 1:
            self._reject('ect_fraction must be in [0, 1]')

    @staticmethod
    def _reject(reason: str):
        _LOG.error(f'Invalid scenario: {reason}')
        raise PcnBenchBadRequestException(f'Invalid scenario: {reason}')

    @classmethod
    def keys(cls) -> tuple[str, ...]:
        return tuple(f.name for f in dataclasses.fields(cls))

    @classmethod
    def from_mapping(cls, values: Mapping[str, Any],
                     base: 'ScenarioConfig | None' = None
                     ) -> Self:
        """
        Parses raw (usually string) values over base. Unknown keys are
        rejected
        """
        base = base or cls()
        unknown = [k for k in values if k not in _PARSERS]
        if unknown:
            raise PcnBenchBadRequestException(
                f'Unknown scenario key(s): {", ".join(unknown)}. Allowed '
                f'keys: {", ".join(cls.keys())}')
        parsed = {}
        for key, value in values.items():
            try:
                parsed[key] = _PARSERS[key](value)
            except PcnBenchBadRequestException as e:
                raise PcnBenchBadRequestException(f'{key}: {e}')
        return dataclasses.replace(base, **parsed)

    def to_mapping(self) -> dict[str, str]:
        """
        Canonical string form; from_mapping(to_mapping()) gives back an
        equal config
        """
        result = {}
        for key in self.keys():
            value = getattr(self, key)
            result[key] = value.value if isinstance(value, str) and \
                hasattr(value, 'value') else repr(value)
        return result


_PARSERS: dict[str, Callable[[Any], Any]] = {
    'technique': _enum_parser(Technique),
    'bandwidth_bps': parse_bandwidth,
    'n_links': _int,
    'n_connections': _int,
    'packet_rate': _float,
    'packet_size': _int,
    'duration': parse_duration,
    'pause_interval': parse_duration,
    'pause_length': parse_duration,
    'seed': _int,
    'sender_mode': _enum_parser(SenderMode),
    'ect_fraction': _float,
    'ar_fraction': _float,
    'sr_fraction': _float,
    'or_fraction': _float,
    'prop_delay': parse_duration,
    'queue_limit': _int,
    'pcn_share': _float,
    'session_rate': _float,
    'holding_time': parse_duration,
    'cle_w': _float,
    'admit_threshold': _float,
    'feedback_delay': parse_duration,
    'termination_policy': _enum_parser(TerminationPolicy),
    'measure_interval': parse_duration,
    'red_w_q': _float,
    'red_min_thr': _float,
    'red_max_thr': _float,
    'red_max_p': _float,
    'tb_depth': parse_duration,
    'tb_threshold_fraction': _float,
    'tb_rate_fraction': _float,
    'bm_mi': parse_duration,
    'bm_threshold_fraction': _float,
    'ab_buffer_capacity': _int,
}

import os
from enum import Enum
from pathlib import Path


class Technique(str, Enum):
    RED = 'red'
    ECN = 'ecn'
    TB = 'tb'
    BM = 'bm'
    AB = 'ab'

    @property
    def label(self) -> str:
        return self.value.upper()


# row order of the benchmark table
TECHNIQUE_TABLE_ORDER = (
    Technique.AB, Technique.ECN, Technique.TB, Technique.BM, Technique.RED
)


class SenderMode(str, Enum):
    AIMD = 'aimd'
    CBR = 'cbr'


class TerminationPolicy(str, Enum):
    NEWEST_FIRST = 'newest_first'
    OLDEST_FIRST = 'oldest_first'


class OutputFormat(str, Enum):
    CSV = 'csv'
    TABLE = 'table'
    BOTH = 'both'


_SENTINEL = object()


class Env(str, Enum):
    default: str | None

    def __new__(cls, value: str, default: str | None = None):
        """
        All environment variables and optionally their default values.
        Since envs always have string type the default value also should be
        of string type and then converted to the necessary type in code.
        There is no default value if not specified (default equal to None)
        """
        obj = str.__new__(cls, value)
        obj._value_ = value

        obj.default = default
        return obj

    BENCH_THREADS = 'PCN_BENCH_THREADS'

    # logs
    LOG_LEVEL = 'PCN_BENCH_LOG_LEVEL', 'INFO'
    CLI_LOG_LEVEL = 'PCN_BENCH_CLI_LOG_LEVEL', 'INFO'
    LOG_PATH = ('PCN_BENCH_LOG_PATH',
                str((Path.home() / '.pcn_bench/log').resolve()))

    def get(self, default=_SENTINEL) -> str | None:
        if default is _SENTINEL:
            default = self.default
        if default is not None:
            default = str(default)
        return os.environ.get(self.value, default)

    def set(self, val: str | None):
        if val is None:
            os.environ.pop(self.value, None)
        else:
            os.environ[self.value] = str(val)


LOG_FILE_NAME = 'pcn_bench.log'
CLI_LOG_FILE_NAME = 'pcn_bench_cli.log'
LOGS_FORMAT = '[%(asctime)s] [%(levelname)s] [%(name)s.%(funcName)s:%(lineno)d] %(message)s'

MICROS_PER_SECOND = 1_000_000
BITS_PER_BYTE = 8

# scenario defaults, desk scale (reference bandwidth tiers divided by ten)
DESK_SCALE = 10
FULL_SCALE_TIERS_BPS = (300_000_000, 400_000_000, 500_000_000)
DEFAULT_TIERS_BPS = tuple(t // DESK_SCALE for t in FULL_SCALE_TIERS_BPS)
DEFAULT_SEEDS = (1, 2, 3, 4, 5)
DEFAULT_TECHNIQUE = Technique.RED
DEFAULT_BANDWIDTH_BPS = DEFAULT_TIERS_BPS[-1]
DEFAULT_N_LINKS = 5
DEFAULT_N_CONNECTIONS = 10
DEFAULT_PACKET_RATE = 15.0
DEFAULT_PACKET_SIZE = 1040
HEADER_SIZE = 40
DEFAULT_DURATION = 60.0
DEFAULT_PAUSE_INTERVAL = 300.0
DEFAULT_PAUSE_LENGTH = 4.0
DEFAULT_SEED = 1
DEFAULT_SENDER_MODE = SenderMode.CBR
# share of every sampled session that is ECN capable
DEFAULT_ECT_FRACTION = 0.8

# link thresholds as capacity fractions
DEFAULT_AR_FRACTION = 0.7
DEFAULT_SR_FRACTION = 0.9
DEFAULT_OR_FRACTION = 0.9
DEFAULT_PROP_DELAY = 0.005
DEFAULT_QUEUE_LIMIT = 50
# capacity share provisioned to the PCN traffic class on every link
DEFAULT_PCN_SHARE = 0.1

# sessions and control plane
DEFAULT_SESSION_RATE = 2.0
DEFAULT_HOLDING_TIME = 20.0
DEFAULT_CLE_W = 0.9
DEFAULT_ADMIT_THRESHOLD = 0.5
DEFAULT_FEEDBACK_DELAY = 0.005
DEFAULT_MEASURE_INTERVAL = 0.2

# meters
DEFAULT_RED_W_Q = 0.02
DEFAULT_RED_MIN_THR = 1.0
DEFAULT_RED_MAX_THR = 3.0
DEFAULT_RED_MAX_P = 0.1
DEFAULT_TB_DEPTH = 0.05
DEFAULT_TB_THRESHOLD_FRACTION = 0.5
# token fill rate as a fraction of Ar
DEFAULT_TB_RATE_FRACTION = 0.85
DEFAULT_BM_MI = 0.2
DEFAULT_BM_THRESHOLD_FRACTION = 1.0
DEFAULT_AB_BUFFER_CAPACITY = 2

# ledger defaults moved off their published values to recover the trend
# claims: key -> (published, in use)
ADJUSTED_DEFAULTS: dict[str, tuple[float, float]] = {
    'pcn_share': (1.0, DEFAULT_PCN_SHARE),
    'session_rate': (0.5, DEFAULT_SESSION_RATE),
    'measure_interval': (0.1, DEFAULT_MEASURE_INTERVAL),
    'bm_mi': (0.1, DEFAULT_BM_MI),
    'ect_fraction': (1.0, DEFAULT_ECT_FRACTION),
    'tb_rate_fraction': (1.0, DEFAULT_TB_RATE_FRACTION),
    'ab_buffer_capacity': (50, DEFAULT_AB_BUFFER_CAPACITY),
    'red_w_q': (0.002, DEFAULT_RED_W_Q),
    'red_min_thr': (5.0, DEFAULT_RED_MIN_THR),
    'red_max_thr': (15.0, DEFAULT_RED_MAX_THR),
}

AIMD_DECREASE_FACTOR = 0.5
MIN_WINDOW = 1.0
TREND_SEED_QUORUM = 0.8

CSV_HEADER = (
    'technique', 'bandwidth_mbps', 'seed', 'throughput_mbps', 'loss_pct',
    'admitted', 'blocked', 'terminated'
)
MAX_COLUMNS_WIDTH = 30
CLI_VIEW = 'cli'
JSON_VIEW = 'json'
TABLE_VIEW = 'table'
PCN_RESPONSE = 'Response'

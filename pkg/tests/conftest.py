import dataclasses
import os
import tempfile

# log_helper creates its directory at import time
os.environ.setdefault('PCN_BENCH_LOG_PATH', tempfile.mkdtemp(prefix='pcn-'))

import pytest  # noqa: E402

from pcn_bench.helpers.constants import (  # noqa: E402
    SenderMode, TECHNIQUE_TABLE_ORDER,
)
from pcn_bench.metrics import (  # noqa: E402
    BenchmarkRow, BenchmarkTable, MetricsRecord,
)
from pcn_bench.simulation import ScenarioConfig  # noqa: E402

# published benchmark, per tier: AB, ECN, TB, BM, RED
PUBLISHED_THROUGHPUT = {
    300_000_000: (29, 34, 30.25, 31, 33),
    400_000_000: (31.75, 33.75, 31.25, 35.25, 39.5),
    500_000_000: (33.5, 34.5, 31.25, 35.5, 38.75),
}
PUBLISHED_LOSS = {
    300_000_000: (3.38, 3, 3.1, 2.95, 2.75),
    400_000_000: (2.4, 2.35, 2.38, 2.38, 2.48),
    500_000_000: (1.85, 2.18, 2.38, 2.3, 2.23),
}
PUBLISHED_SESSIONS = {
    300_000_000: (55, 56, 53, 58, 58),
    400_000_000: (63, 62, 55, 63, 62),
    500_000_000: (71, 66, 64, 65, 65),
}


def build_table(throughput, loss, sessions) -> BenchmarkTable:
    rows = []
    for tier in throughput:
        for i, technique in enumerate(TECHNIQUE_TABLE_ORDER):
            rows.append(BenchmarkRow(
                bandwidth_bps=tier, technique=technique,
                avg_throughput=throughput[tier][i],
                avg_loss=loss[tier][i],
                avg_sessions=sessions[tier][i],
            ))
    return BenchmarkTable.from_rows(rows)


@pytest.fixture
def published_table() -> BenchmarkTable:
    return build_table(PUBLISHED_THROUGHPUT, PUBLISHED_LOSS,
                       PUBLISHED_SESSIONS)


@pytest.fixture
def small_config() -> ScenarioConfig:
    """
    A scenario that runs in well under a second
    """
    return ScenarioConfig(
        bandwidth_bps=5_000_000,
        n_links=1,
        n_connections=6,
        duration=1.0,
        queue_limit=5,
        ab_buffer_capacity=5,
        session_rate=1.0,
        holding_time=0.5,
    )


@pytest.fixture
def make_config(small_config):
    def make(**changes) -> ScenarioConfig:
        return dataclasses.replace(small_config, **changes)
    return make


@pytest.fixture
def low_load_config() -> ScenarioConfig:
    return ScenarioConfig(
        bandwidth_bps=10_000_000,
        n_connections=2,
        session_rate=0.0,
        duration=2.0,
        sender_mode=SenderMode.CBR,
    )


@pytest.fixture
def make_record():
    def make(technique, bandwidth_bps: int, seed: int = 1,
             throughput: float = 10.0, loss: float = 1.0,
             sessions: int = 10) -> MetricsRecord:
        return MetricsRecord(
            technique=technique, bandwidth_bps=bandwidth_bps, seed=seed,
            tsp=100, tap=99, lp=1, drop_rate_pct=loss,
            throughput_mbps=throughput, admitted_sessions=sessions,
            blocked_sessions=0, terminated_sessions=0,
        )
    return make


@pytest.fixture
def published_records(make_record):
    """
    The published table as per-seed records, identical for seeds 1 to 5
    """
    records = []
    for seed in range(1, 6):
        for tier in PUBLISHED_THROUGHPUT:
            for i, technique in enumerate(TECHNIQUE_TABLE_ORDER):
                records.append(make_record(
                    technique, tier, seed,
                    throughput=PUBLISHED_THROUGHPUT[tier][i],
                    loss=PUBLISHED_LOSS[tier][i],
                    sessions=PUBLISHED_SESSIONS[tier][i],
                ))
    return records


@pytest.fixture
def make_table():
    return build_table

import os

import pytest

from pcn_bench.helpers.constants import (
    DEFAULT_SEEDS, DEFAULT_TIERS_BPS, TECHNIQUE_TABLE_ORDER, Technique,
)
from pcn_bench.helpers.exceptions import (
    PcnBenchConfigurationException, PcnBenchScenarioException,
)
from pcn_bench.services import SERVICE_PROVIDER
from pcn_bench.services import bench_service as bench_module
from pcn_bench.services.bench_service import BenchService
from pcn_bench.services.environment_service import EnvironmentService
from pcn_bench.simulation import ScenarioConfig


def test_bench_threads_defaults_to_cpu_count():
    assert EnvironmentService({}).bench_threads() == (os.cpu_count() or 1)
    assert EnvironmentService(
        {'PCN_BENCH_THREADS': '3'}).bench_threads() == 3


@pytest.mark.parametrize('value', ['0', '-2', 'many'])
def test_bench_threads_validation(value):
    env = EnvironmentService({'PCN_BENCH_THREADS': value})
    with pytest.raises(PcnBenchConfigurationException):
        env.bench_threads()


def test_service_provider_caches_services():
    assert SERVICE_PROVIDER.bench_service is SERVICE_PROVIDER.bench_service
    assert SERVICE_PROVIDER.bench_service._env is SERVICE_PROVIDER.env


def test_matrix_order():
    configs = BenchService.matrix(ScenarioConfig(), DEFAULT_TIERS_BPS,
                                  DEFAULT_SEEDS)
    assert len(configs) == 75
    keys = [(c.technique, c.bandwidth_bps, c.seed) for c in configs]
    assert keys[0] == (Technique.AB, DEFAULT_TIERS_BPS[0], 1)
    assert keys[1] == (Technique.AB, DEFAULT_TIERS_BPS[0], 2)
    assert keys[5] == (Technique.AB, DEFAULT_TIERS_BPS[1], 1)
    assert keys[-1] == (Technique.RED, DEFAULT_TIERS_BPS[-1], 5)
    assert [c.technique for c in configs[::15]] == \
        list(TECHNIQUE_TABLE_ORDER)


def test_run_all_keeps_input_order(make_config):
    service = BenchService(EnvironmentService({'PCN_BENCH_THREADS': '3'}))
    configs = [make_config(seed=s, duration=0.3) for s in (3, 1, 2, 5)]
    records = service.run_all(configs)
    assert [r.seed for r in records] == [3, 1, 2, 5]
    assert records[1] == service.run_one(configs[1])


def test_run_all_names_the_failed_scenario(make_config, monkeypatch):
    real_run = bench_module.run

    def flaky(config):
        if config.seed == 2:
            raise ValueError('boom')
        return real_run(config)

    monkeypatch.setattr(bench_module, 'run', flaky)
    service = BenchService(EnvironmentService({'PCN_BENCH_THREADS': '2'}))
    configs = [make_config(seed=s, duration=0.2) for s in (1, 2)]
    with pytest.raises(PcnBenchScenarioException, match='boom') as e:
        service.run_all(configs)
    assert e.value.seed == 2


def test_bench_end_to_end(make_config):
    service = BenchService(EnvironmentService({'PCN_BENCH_THREADS': '2'}))
    base = make_config(duration=0.3, n_connections=2, session_rate=0)
    result = service.bench(base, [2_000_000, 3_000_000], [1])
    assert len(result.records) == 10
    assert result.table.tiers == (2_000_000, 3_000_000)
    assert len(result.trends) == 7
    assert all(v.seeds == 1 for v in result.votes)
    assert result.failed_claims == [
        t.claim_id for t in result.trends if not t.passed]


def test_default_bench_matrix():
    service = BenchService(EnvironmentService({'PCN_BENCH_THREADS': '2'}))
    base = ScenarioConfig()
    result = service.bench(base, DEFAULT_TIERS_BPS, DEFAULT_SEEDS)
    assert len(result.records) == 75
    for record in result.records:
        assert record.tsp == record.tap + record.lp
        assert record.throughput_mbps > 0.02 * record.bandwidth_mbps
        assert record.admitted_sessions > base.n_connections
    assert any(r.lp > 0 for r in result.records
               if r.technique in (Technique.AB, Technique.ECN))
    votes = {v.claim_id: v for v in result.votes}
    assert all(v.seeds == len(DEFAULT_SEEDS) for v in votes.values())
    assert votes['T3'].holds

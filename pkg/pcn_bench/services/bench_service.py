import dataclasses
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

from pcn_bench.helpers.constants import TECHNIQUE_TABLE_ORDER, Technique
from pcn_bench.helpers.exceptions import PcnBenchScenarioException
from pcn_bench.helpers.log_helper import get_logger
from pcn_bench.metrics import (
    BenchmarkTable, MetricsRecord, TrendResult, TrendVote, aggregate,
    trend_check, trend_vote,
)
from pcn_bench.services.environment_service import EnvironmentService
from pcn_bench.simulation import ScenarioConfig, run

_LOG = get_logger(__name__)


@dataclass(frozen=True)
class BenchResult:
    records: tuple[MetricsRecord, ...]
    table: BenchmarkTable
    trends: tuple[TrendResult, ...]
    votes: tuple[TrendVote, ...]

    @property
    def failed_claims(self) -> list[str]:
        return [t.claim_id for t in self.trends if not t.passed]


class BenchService:
    def __init__(self, env: EnvironmentService):
        self._env = env

    @staticmethod
    def matrix(base: ScenarioConfig, tiers: Iterable[int],
               seeds: Iterable[int],
               techniques: Sequence[Technique] = TECHNIQUE_TABLE_ORDER
               ) -> list[ScenarioConfig]:
        tiers, seeds = list(tiers), list(seeds)
        return [
            dataclasses.replace(base, technique=technique,
                                bandwidth_bps=tier, seed=seed)
            for technique in techniques
            for tier in tiers
            for seed in seeds
        ]

    def run_one(self, config: ScenarioConfig) -> MetricsRecord:
        return run(config)

    def run_all(self, configs: Sequence[ScenarioConfig]
                ) -> list[MetricsRecord]:
        """
        Runs scenarios concurrently; results come back in the order of
        configs whatever the completion order
        """
        threads = min(self._env.bench_threads(), max(len(configs), 1))
        _LOG.info(f'Running {len(configs)} scenario(s) on {threads} '
                  f'thread(s)')
        records = []
        pool = ThreadPoolExecutor(max_workers=threads)
        try:
            futures = [pool.submit(run, config) for config in configs]
            for config, future in zip(configs, futures):
                try:
                    records.append(future.result())
                except Exception as e:
                    _LOG.exception(
                        f'Scenario {config.technique.value}/'
                        f'{config.bandwidth_bps}/{config.seed} failed')
                    raise PcnBenchScenarioException(
                        technique=config.technique.value,
                        bandwidth_bps=config.bandwidth_bps,
                        seed=config.seed, reason=str(e)) from e
        finally:
            pool.shutdown(wait=True, cancel_futures=True)
        return records

    def bench(self, base: ScenarioConfig, tiers: Iterable[int],
              seeds: Iterable[int]) -> BenchResult:
        records = self.run_all(self.matrix(base, tiers, seeds))
        table = aggregate(records)
        return BenchResult(
            records=tuple(records),
            table=table,
            trends=tuple(trend_check(table)),
            votes=tuple(trend_vote(records)),
        )

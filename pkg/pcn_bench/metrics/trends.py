"""
Ordinal claims of the published benchmark, checked against a table.

The published loss figures at the top tier disagree with the prose (table:
AB lowest; prose: TB lowest), so both readings are separate claims.
"""
import math
from collections import defaultdict
from dataclasses import dataclass
from typing import Callable, Iterable

from pcn_bench.helpers.constants import TREND_SEED_QUORUM, Technique
from pcn_bench.metrics.bench_table import BenchmarkTable, Factor, aggregate
from pcn_bench.metrics.record import MetricsRecord


@dataclass(frozen=True, slots=True)
class TrendResult:
    claim_id: str
    description: str
    passed: bool


@dataclass(frozen=True, slots=True)
class TrendVote:
    claim_id: str
    passes: int
    seeds: int
    quorum: float

    @property
    def holds(self) -> bool:
        return self.seeds > 0 and self.passes >= math.ceil(
            self.quorum * self.seeds - 1e-9)


def _strictly_highest(values: dict[Technique, float],
                      technique: Technique) -> bool:
    own = values[technique]
    return all(own > v for t, v in values.items() if t is not technique)


def _strictly_lowest(values: dict[Technique, float],
                     technique: Technique) -> bool:
    own = values[technique]
    return all(own < v for t, v in values.items() if t is not technique)


def _in_bottom_two(values: dict[Technique, float],
                   technique: Technique) -> bool:
    own = values[technique]
    at_or_below = sum(1 for t, v in values.items()
                      if t is not technique and v <= own)
    return at_or_below <= 1


def _red_best_throughput_top_tiers(table: BenchmarkTable) -> bool:
    return all(_strictly_highest(table.values(Factor.THROUGHPUT, tier),
                                 Technique.RED)
               for tier in table.tiers[-2:])


def _ecn_best_throughput_lowest_tier(table: BenchmarkTable) -> bool:
    return _strictly_highest(
        table.values(Factor.THROUGHPUT, table.tiers[0]), Technique.ECN)


def _tb_bottom_two_throughput(table: BenchmarkTable) -> bool:
    return all(_in_bottom_two(table.values(Factor.THROUGHPUT, tier),
                              Technique.TB)
               for tier in table.tiers)


def _sessions_ordering(table: BenchmarkTable) -> bool:
    ab_most = _strictly_highest(
        table.values(Factor.SESSIONS, table.tiers[-1]), Technique.AB)
    tb_fewest = all(_strictly_lowest(table.values(Factor.SESSIONS, tier),
                                     Technique.TB)
                    for tier in table.tiers)
    return ab_most and tb_fewest


def _red_lowest_loss_lowest_tier(table: BenchmarkTable) -> bool:
    return _strictly_lowest(table.values(Factor.LOSS, table.tiers[0]),
                            Technique.RED)


def _ab_lowest_loss_top_tier(table: BenchmarkTable) -> bool:
    return _strictly_lowest(table.values(Factor.LOSS, table.tiers[-1]),
                            Technique.AB)


def _tb_lowest_loss_top_tier(table: BenchmarkTable) -> bool:
    return _strictly_lowest(table.values(Factor.LOSS, table.tiers[-1]),
                            Technique.TB)


CLAIMS: tuple[tuple[str, str, Callable[[BenchmarkTable], bool]], ...] = (
    ('T1', 'RED has the highest throughput at the top two tiers',
     _red_best_throughput_top_tiers),
    ('T2', 'ECN has the highest throughput at the lowest tier',
     _ecn_best_throughput_lowest_tier),
    ('T3', 'TB is in the bottom two for throughput at every tier',
     _tb_bottom_two_throughput),
    ('T4', 'AB admits the most sessions at the top tier and TB the fewest '
           'at every tier', _sessions_ordering),
    ('T5', 'RED has the lowest loss ratio at the lowest tier',
     _red_lowest_loss_lowest_tier),
    ('L-TOP-TABLE', 'AB has the lowest loss ratio at the top tier '
                    '(table reading)', _ab_lowest_loss_top_tier),
    ('L-TOP-TEXT', 'TB has the lowest loss ratio at the top tier '
                   '(prose reading)', _tb_lowest_loss_top_tier),
)

# scenario keys whose values decide each claim
CLAIM_PARAMETERS: dict[str, tuple[str, ...]] = {
    'T1': ('red_min_thr', 'red_max_thr', 'red_max_p', 'red_w_q',
           'queue_limit', 'ect_fraction', 'ab_buffer_capacity'),
    'T2': ('red_min_thr', 'red_max_thr', 'red_max_p', 'red_w_q',
           'ect_fraction', 'cle_w', 'admit_threshold'),
    'T3': ('tb_depth', 'tb_threshold_fraction', 'tb_rate_fraction',
           'ab_buffer_capacity', 'or_fraction'),
    'T4': ('ar_fraction', 'or_fraction', 'sr_fraction', 'tb_rate_fraction',
           'bm_mi', 'measure_interval', 'session_rate', 'pcn_share'),
    'T5': ('red_min_thr', 'red_max_thr', 'red_max_p', 'red_w_q',
           'queue_limit', 'ect_fraction'),
    'L-TOP-TABLE': ('ab_buffer_capacity', 'ar_fraction', 'or_fraction'),
    'L-TOP-TEXT': ('tb_depth', 'tb_threshold_fraction'),
}


def trend_check(table: BenchmarkTable) -> list[TrendResult]:
    return [TrendResult(claim_id=claim_id, description=description,
                        passed=check(table))
            for claim_id, description, check in CLAIMS]


def trend_vote(records: Iterable[MetricsRecord],
               quorum: float = TREND_SEED_QUORUM) -> list[TrendVote]:
    """
    Re-evaluates every claim on each seed's own table and counts the seeds
    it passes in
    """
    by_seed: dict[int, list[MetricsRecord]] = defaultdict(list)
    for record in records:
        by_seed[record.seed].append(record)
    passes = defaultdict(int)
    for seed in sorted(by_seed):
        for result in trend_check(aggregate(by_seed[seed])):
            passes[result.claim_id] += result.passed
    return [TrendVote(claim_id=claim_id, passes=passes[claim_id],
                      seeds=len(by_seed), quorum=quorum)
            for claim_id, _, _ in CLAIMS]

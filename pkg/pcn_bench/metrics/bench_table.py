from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from statistics import fmean
from typing import Iterable

from typing_extensions import Self

from pcn_bench.helpers.constants import TECHNIQUE_TABLE_ORDER, Technique
from pcn_bench.helpers.exceptions import PcnBenchBadRequestException
from pcn_bench.metrics.record import MetricsRecord


class Factor(str, Enum):
    THROUGHPUT = 'AVERAGE THROUGHPUT'
    LOSS = 'AVERAGE PACKET LOSS RATE'
    SESSIONS = 'AVERAGE ADMITTED SESSIONS'


@dataclass(frozen=True, slots=True)
class BenchmarkRow:
    bandwidth_bps: int
    technique: Technique
    avg_throughput: float
    avg_loss: float
    avg_sessions: float
    seeds: int = 1

    def value(self, factor: Factor) -> float:
        match factor:
            case Factor.THROUGHPUT:
                return self.avg_throughput
            case Factor.LOSS:
                return self.avg_loss
        return self.avg_sessions


@dataclass(frozen=True)
class BenchmarkTable:
    """
    One row per (tier, technique), tiers ascending, techniques in table
    order
    """
    rows: tuple[BenchmarkRow, ...]

    @classmethod
    def from_rows(cls, rows: Iterable[BenchmarkRow]) -> Self:
        rows = list(rows)
        tiers = sorted({r.bandwidth_bps for r in rows})
        cells = {(r.bandwidth_bps, r.technique): r for r in rows}
        missing = [
            f'{t.value}@{tier}' for tier in tiers
            for t in TECHNIQUE_TABLE_ORDER if (tier, t) not in cells
        ]
        if missing or not rows:
            raise PcnBenchBadRequestException(
                f'Benchmark matrix is incomplete. Missing cells: '
                f'{", ".join(missing) or "all"}')
        return cls(rows=tuple(
            cells[(tier, t)] for tier in tiers for t in TECHNIQUE_TABLE_ORDER
        ))

    @property
    def tiers(self) -> tuple[int, ...]:
        return tuple(sorted({r.bandwidth_bps for r in self.rows}))

    def tier(self, bandwidth_bps: int) -> dict[Technique, BenchmarkRow]:
        return {r.technique: r for r in self.rows
                if r.bandwidth_bps == bandwidth_bps}

    def values(self, factor: Factor,
               bandwidth_bps: int) -> dict[Technique, float]:
        return {t: row.value(factor)
                for t, row in self.tier(bandwidth_bps).items()}


def aggregate(records: Iterable[MetricsRecord]) -> BenchmarkTable:
    """
    Arithmetic mean over seeds for every (tier, technique) cell
    """
    cells: dict[tuple[int, Technique], list[MetricsRecord]] = \
        defaultdict(list)
    for record in records:
        cells[(record.bandwidth_bps, record.technique)].append(record)
    rows = []
    for (tier, technique), group in cells.items():
        # sorted so the float sums do not depend on input order
        group.sort(key=lambda r: (r.seed, r.throughput_mbps, r.drop_rate_pct,
                                  r.admitted_sessions))
        rows.append(BenchmarkRow(
            bandwidth_bps=tier,
            technique=technique,
            avg_throughput=fmean(r.throughput_mbps for r in group),
            avg_loss=fmean(r.drop_rate_pct for r in group),
            avg_sessions=fmean(r.admitted_sessions for r in group),
            seeds=len(group),
        ))
    return BenchmarkTable.from_rows(rows)

"""
Text renderings of benchmark results: per-run CSV, the benchmark table and
the trend report.
"""
import csv
import io
import os
from typing import Iterable, Mapping, Sequence

from prettytable import PrettyTable

from pcn_bench.helpers.constants import (
    ADJUSTED_DEFAULTS, CSV_HEADER, TECHNIQUE_TABLE_ORDER,
)
from pcn_bench.metrics.bench_table import BenchmarkTable, Factor
from pcn_bench.metrics.record import MetricsRecord
from pcn_bench.metrics.trends import CLAIM_PARAMETERS, TrendResult, TrendVote

_TECHNIQUE_RANK = {t: i for i, t in enumerate(TECHNIQUE_TABLE_ORDER)}


def _mbps(bandwidth_bps: int) -> str:
    return f'{bandwidth_bps / 1_000_000:g}'


def csv_order(record: MetricsRecord) -> tuple[int, int, int]:
    return (_TECHNIQUE_RANK[record.technique], record.bandwidth_bps,
            record.seed)


def render_csv(records: Iterable[MetricsRecord]) -> str:
    """
    One row per run in (technique, tier, seed) order, RFC 4180 line endings
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\r\n')
    writer.writerow(CSV_HEADER)
    for r in sorted(records, key=csv_order):
        writer.writerow((
            r.technique.value, _mbps(r.bandwidth_bps), r.seed,
            f'{r.throughput_mbps:.2f}', f'{r.drop_rate_pct:.2f}',
            r.admitted_sessions, r.blocked_sessions, r.terminated_sessions,
        ))
    return buffer.getvalue()


def render_table(table: BenchmarkTable) -> str:
    response = PrettyTable()
    response.field_names = ['Bandwidth, Mbps', 'Factor'] + [
        t.label for t in TECHNIQUE_TABLE_ORDER]
    for tier in table.tiers:
        for factor in Factor:
            values = table.values(factor, tier)
            response.add_row([_mbps(tier), factor.value] + [
                f'{values[t]:.2f}' for t in TECHNIQUE_TABLE_ORDER])
    return str(response)


def throughput_summary(table: BenchmarkTable) -> list[str]:
    """
    By how much the best technique outperforms the worst one at every tier
    """
    lines = []
    for tier in table.tiers:
        values = table.values(Factor.THROUGHPUT, tier)
        ranked = sorted(TECHNIQUE_TABLE_ORDER, key=lambda t: values[t])
        worst, best = ranked[0], ranked[-1]
        if values[worst] <= 0:
            lines.append(f'{_mbps(tier)} Mbps: {best.label} leads, '
                         f'{worst.label} delivered nothing')
            continue
        gain = (values[best] - values[worst]) * 100 / values[worst]
        lines.append(f'{_mbps(tier)} Mbps: {best.label} is {gain:.1f} % '
                     f'better than {worst.label}')
    return lines


def _published(key: str) -> str | None:
    if key not in ADJUSTED_DEFAULTS:
        return None
    return repr(ADJUSTED_DEFAULTS[key][0])


def _ledger_entry(key: str, value: str) -> str:
    published = _published(key)
    if published is None or published == value:
        return f'{key}={value}'
    return f'{key}={value} (published {published})'


def render_adjustments(params: Mapping[str, str]) -> str:
    """
    Ledger values that differ from their published defaults
    """
    response = PrettyTable()
    response.field_names = ['Key', 'Published', 'In use']
    response.align = 'l'
    for key in ADJUSTED_DEFAULTS:
        if key in params and params[key] != _published(key):
            response.add_row([key, _published(key), params[key]])
    return str(response)


def render_trends(results: Sequence[TrendResult],
                  votes: Sequence[TrendVote] = (),
                  params: Mapping[str, str] | None = None) -> str:
    votes_by_claim = {v.claim_id: v for v in votes}
    lines = []
    for result in results:
        line = f'{result.claim_id:<12} ' \
               f'{"PASS" if result.passed else "FAIL"}  {result.description}'
        vote = votes_by_claim.get(result.claim_id)
        if vote:
            line += f' [seeds {vote.passes}/{vote.seeds}, ' \
                    f'{"holds" if vote.holds else "does not hold"}]'
        lines.append(line)
        if not result.passed and params is not None:
            ledger = ', '.join(
                _ledger_entry(key, params[key])
                for key in CLAIM_PARAMETERS.get(result.claim_id, ())
                if key in params
            )
            lines.append(f'{"":<12} ledger: {ledger}')
    return os.linesep.join(lines)


def render_report(table: BenchmarkTable, results: Sequence[TrendResult],
                  votes: Sequence[TrendVote] = (),
                  params: Mapping[str, str] | None = None) -> str:
    sections = [
        render_table(table),
        '',
        'Throughput spread:',
        *throughput_summary(table),
        '',
        'Trend check:',
        render_trends(results, votes, params),
    ]
    if params is not None:
        sections += ['', 'Adjusted ledger defaults:',
                     render_adjustments(params)]
    return os.linesep.join(sections)

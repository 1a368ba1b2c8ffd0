from pcn_bench.metrics.bench_table import (
    BenchmarkRow, BenchmarkTable, Factor, aggregate,
)
from pcn_bench.metrics.formulas import loss_stats, throughput
from pcn_bench.metrics.record import MetricsRecord
from pcn_bench.metrics.report import (
    render_adjustments, render_csv, render_report, render_table,
    render_trends, throughput_summary,
)
from pcn_bench.metrics.trends import (
    CLAIM_PARAMETERS, TrendResult, TrendVote, trend_check, trend_vote,
)

__all__ = (
    'BenchmarkRow', 'BenchmarkTable', 'CLAIM_PARAMETERS', 'Factor',
    'MetricsRecord', 'TrendResult', 'TrendVote', 'aggregate', 'loss_stats',
    'render_adjustments', 'render_csv', 'render_report', 'render_table',
    'render_trends', 'throughput', 'throughput_summary', 'trend_check',
    'trend_vote',
)

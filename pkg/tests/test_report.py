from pcn_bench.helpers.constants import CSV_HEADER, Technique
from pcn_bench.metrics import (
    TrendResult, render_adjustments, render_csv, render_report, render_table,
    render_trends, trend_check, trend_vote, throughput_summary,
)
from pcn_bench.simulation import ScenarioConfig


def test_csv_rows_in_table_order(make_record):
    records = [
        make_record(Technique.RED, 300_000_000, 1),
        make_record(Technique.AB, 300_000_000, 2),
        make_record(Technique.AB, 300_000_000, 1, throughput=29.004,
                    loss=3.375),
        make_record(Technique.ECN, 5_500_000, 1),
    ]
    text = render_csv(records)
    assert text.endswith('\r\n')
    lines = text.split('\r\n')[:-1]
    assert lines[0] == ','.join(CSV_HEADER)
    assert lines[1] == 'ab,300,1,29.00,3.38,10,0,0'
    assert lines[2].startswith('ab,300,2,')
    assert lines[3].startswith('ecn,5.5,1,')
    assert lines[4].startswith('red,300,1,')


def test_csv_of_nothing_is_the_header():
    assert render_csv([]) == ','.join(CSV_HEADER) + '\r\n'


def test_table_layout(published_table):
    text = render_table(published_table)
    lines = text.splitlines()
    header = [c.strip() for c in lines[1].strip('|').split('|')]
    assert header == ['Bandwidth, Mbps', 'Factor', 'AB', 'ECN', 'TB', 'BM',
                      'RED']
    data = [line for line in lines if 'AVERAGE' in line]
    assert len(data) == 9
    assert '39.50' in text
    assert 'AVERAGE PACKET LOSS RATE' in text


def test_throughput_summary(published_table):
    assert throughput_summary(published_table)[0] == \
        '300 Mbps: ECN is 17.2 % better than AB'


def test_failed_claims_name_their_parameters(published_table,
                                             published_records):
    results = trend_check(published_table)
    text = render_trends(results, trend_vote(published_records),
                         ScenarioConfig().to_mapping())
    assert text.count('ledger:') == 1
    assert 'ledger: tb_depth=0.05, tb_threshold_fraction=0.5' in text
    assert '[seeds 5/5, holds]' in text
    assert 'L-TOP-TEXT   FAIL' in text


def test_trends_without_parameters_have_no_ledger(published_table):
    text = render_trends(trend_check(published_table))
    assert 'ledger' not in text
    assert len(text.splitlines()) == 7


def test_report_sections(published_table):
    text = render_report(published_table, trend_check(published_table))
    assert 'Throughput spread:' in text
    assert 'Trend check:' in text
    assert text.index('Throughput spread:') < text.index('Trend check:')


def test_report_lists_adjusted_defaults(published_table):
    text = render_report(published_table, trend_check(published_table),
                         params=ScenarioConfig().to_mapping())
    assert 'Adjusted ledger defaults:' in text
    rows = [line for line in text.splitlines() if 'pcn_share' in line]
    assert len(rows) == 1
    cells = [c.strip() for c in rows[0].strip('|').split('|')]
    assert cells == ['pcn_share', '1.0', '0.1']


def test_report_without_parameters_has_no_adjustments(published_table):
    text = render_report(published_table, trend_check(published_table))
    assert 'Adjusted ledger defaults:' not in text


def test_adjustments_skip_published_values():
    params = ScenarioConfig(pcn_share=1.0, session_rate=0.5).to_mapping()
    text = render_adjustments(params)
    assert 'pcn_share' not in text
    assert 'session_rate' not in text
    assert 'bm_mi' in text


def test_failed_claim_ledger_shows_published_values():
    results = [TrendResult(claim_id='T4', description='sessions',
                           passed=False)]
    text = render_trends(results, params=ScenarioConfig().to_mapping())
    assert 'ar_fraction=0.7,' in text
    assert 'session_rate=2.0 (published 0.5)' in text
    assert 'pcn_share=0.1 (published 1.0)' in text

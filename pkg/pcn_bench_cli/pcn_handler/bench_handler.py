import os

from pcn_bench.helpers.constants import (
    DEFAULT_SEEDS, DEFAULT_TIERS_BPS, OutputFormat,
)
from pcn_bench.helpers.decorators import CommandResponse
from pcn_bench.helpers.exceptions import PcnBenchBadRequestException
from pcn_bench.helpers.file_helper import write_text_file
from pcn_bench.helpers.log_helper import get_logger
from pcn_bench.helpers.utilities import parse_bandwidth, parse_seeds
from pcn_bench.metrics import render_csv, render_report
from pcn_bench.services.bench_service import BenchService
from pcn_bench.services.scenario_service import ScenarioService

_LOG = get_logger(__name__)


class BenchHandler:
    def __init__(self, scenario_service: ScenarioService,
                 bench_service: BenchService):
        self.scenario_service = scenario_service
        self.bench_service = bench_service

    @staticmethod
    def _tiers(bandwidths) -> list[int]:
        if not bandwidths:
            return list(DEFAULT_TIERS_BPS)
        try:
            return sorted({parse_bandwidth(b) for b in bandwidths})
        except PcnBenchBadRequestException as e:
            raise PcnBenchBadRequestException(f'--bandwidth: {e}')

    @staticmethod
    def _seeds(seeds) -> list[int]:
        if not seeds:
            return list(DEFAULT_SEEDS)
        try:
            return parse_seeds(seeds)
        except PcnBenchBadRequestException as e:
            raise PcnBenchBadRequestException(f'--seeds: {e}')

    def bench_handler(self, bandwidths, seeds, duration, config_path,
                      overrides, output, out_path, strict):
        base = self.scenario_service.resolve(
            config_path=config_path,
            flags={'duration': duration},
            overrides=overrides,
        )
        tiers, seed_list = self._tiers(bandwidths), self._seeds(seeds)
        _LOG.info(f'Going to run benchmark: tiers {tiers}, seeds '
                  f'{seed_list}')
        result = self.bench_service.bench(base, tiers, seed_list)

        csv_text = render_csv(result.records)
        output = OutputFormat(output)
        parts = []
        if output in (OutputFormat.TABLE, OutputFormat.BOTH):
            parts.append(render_report(result.table, result.trends,
                                       result.votes, base.to_mapping()))
        if output in (OutputFormat.CSV, OutputFormat.BOTH) and not out_path:
            parts.append(csv_text.rstrip('\r\n'))
        if out_path:
            path = write_text_file(out_path, csv_text)
            _LOG.info(f'CSV has been stored by path: \'{path}\'')
            parts.append(f'CSV has been stored by path: \'{path}\'')

        failed = result.failed_claims
        if failed:
            _LOG.warning(f'Trend claims failed: {", ".join(failed)}')
        message = (os.linesep * 2).join(parts)
        if strict and failed:
            return CommandResponse(
                message=f'{message}{os.linesep * 2}Trend claims failed: '
                        f'{", ".join(failed)}',
                error=True)
        return CommandResponse(message=message)

import os

from pcn_bench.helpers.decorators import CommandResponse
from pcn_bench.helpers.file_helper import write_text_file
from pcn_bench.helpers.log_helper import get_logger
from pcn_bench.metrics import render_csv
from pcn_bench.services.bench_service import BenchService
from pcn_bench.services.scenario_service import ScenarioService

_LOG = get_logger(__name__)


class RunHandler:
    def __init__(self, scenario_service: ScenarioService,
                 bench_service: BenchService):
        self.scenario_service = scenario_service
        self.bench_service = bench_service

    def _resolve(self, technique, bandwidth, duration, seed, config_path,
                 overrides):
        return self.scenario_service.resolve(
            config_path=config_path,
            flags={
                'technique': technique,
                'bandwidth_bps': bandwidth,
                'duration': duration,
                'seed': seed,
            },
            overrides=overrides,
        )

    def run_handler(self, technique, bandwidth, duration, seed, config_path,
                    overrides, out_path):
        config = self._resolve(technique, bandwidth, duration, seed,
                               config_path, overrides)
        _LOG.info(f'Going to run scenario: technique '
                  f'\'{config.technique.value}\', bandwidth '
                  f'\'{config.bandwidth_bps}\', seed \'{config.seed}\'')
        record = self.bench_service.run_one(config)
        title = f'Scenario {config.technique.label} ' \
                f'{record.bandwidth_mbps:g} Mbps, seed {config.seed}'
        if out_path:
            path = write_text_file(out_path, render_csv([record]))
            _LOG.info(f'CSV has been stored by path: \'{path}\'')
            title += f'{os.linesep}CSV has been stored by path: \'{path}\''
        return CommandResponse(table_title=title, items=[record.to_dict()])

    def validate_handler(self, technique, bandwidth, duration, seed,
                         config_path, overrides):
        config = self._resolve(technique, bandwidth, duration, seed,
                               config_path, overrides)
        return CommandResponse(
            table_title='Resolved scenario',
            items=[{'Key': key, 'Value': value}
                   for key, value in config.to_mapping().items()],
        )

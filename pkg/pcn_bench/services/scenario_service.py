from typing import Any, Iterable, Mapping

from pcn_bench.helpers.exceptions import PcnBenchBadRequestException
from pcn_bench.helpers.file_helper import open_scenario_file
from pcn_bench.helpers.log_helper import get_logger
from pcn_bench.simulation.scenario import ScenarioConfig

_LOG = get_logger(__name__)


class ScenarioService:
    """
    Resolves a scenario from its layers: defaults, then the scenario file,
    then explicit flags, then key=value overrides
    """

    @staticmethod
    def parse_overrides(overrides: Iterable[str]) -> dict[str, str]:
        result = {}
        for token in overrides:
            key, sep, value = token.partition('=')
            key, value = key.strip(), value.strip()
            if not sep or not key:
                _LOG.error(f'Malformed override: \'{token}\'')
                raise PcnBenchBadRequestException(
                    f'Malformed override: \'{token}\'. Expected key=value')
            result[key] = value
        return result

    def resolve(self, config_path: str | None = None,
                flags: Mapping[str, Any] | None = None,
                overrides: Iterable[str] = ()) -> ScenarioConfig:
        config = ScenarioConfig()
        if config_path:
            _LOG.debug(f'Reading scenario file {config_path}')
            config = ScenarioConfig.from_mapping(
                open_scenario_file(config_path), base=config)
        if flags:
            given = {k: v for k, v in flags.items() if v is not None}
            config = ScenarioConfig.from_mapping(given, base=config)
        parsed = self.parse_overrides(overrides)
        if parsed:
            config = ScenarioConfig.from_mapping(parsed, base=config)
        return config

from pathlib import Path

from pcn_bench.helpers.exceptions import (
    PcnBenchBadRequestException, PcnBenchConfigurationException,
)
from pcn_bench.helpers.log_helper import get_logger

_LOG = get_logger(__name__)


def parse_key_value_lines(lines, source: str = 'config') -> dict[str, str]:
    """
    Parses flat key=value lines. '#' starts a comment, blank lines are
    skipped. The last occurrence of a key wins
    """
    result = {}
    for number, raw in enumerate(lines, start=1):
        line = raw.split('#', maxsplit=1)[0].strip()
        if not line:
            continue
        if '=' not in line:
            _LOG.error(f'Malformed line {number} in {source}')
            raise PcnBenchBadRequestException(
                f'Malformed line {number} in {source}: \'{raw.strip()}\'. '
                f'Expected key=value')
        key, value = (part.strip() for part in line.split('=', maxsplit=1))
        if not key:
            raise PcnBenchBadRequestException(
                f'Empty key on line {number} in {source}')
        result[key] = value
    return result


def open_scenario_file(file_path: str | Path) -> dict[str, str]:
    path = Path(file_path)
    if not path.is_file():
        _LOG.error(f'Scenario file \'{path}\' does not exist')
        raise PcnBenchBadRequestException(
            f'Seems like config file "{path}" does not exist. Please check '
            f'spelling')
    try:
        with open(path) as file:
            return parse_key_value_lines(file, source=str(path))
    except OSError:
        raise PcnBenchConfigurationException(
            f'Error occurred while opening file {path}')


def write_text_file(file_path: str | Path, content: str) -> Path:
    """
    Writes content as is; line endings are not translated
    """
    path = Path(file_path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, 'w', newline='') as file:
            file.write(content)
    except OSError:
        _LOG.exception(f'Can not write {path}')
        raise PcnBenchConfigurationException(
            f'Error occurred while writing file {path}')
    return path.resolve()

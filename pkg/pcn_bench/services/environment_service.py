import os
from typing import Mapping, MutableMapping

from pcn_bench.helpers.constants import Env
from pcn_bench.helpers.exceptions import PcnBenchConfigurationException


class EnvironmentService:
    __slots__ = '_source',

    def __init__(self, source: MutableMapping):
        self._source = source

    def update_with(self, source: Mapping) -> None:
        self._source.update(source)

    def _get(self, name: Env) -> str | None:
        if val := self._source.get(name.value):
            return val
        return name.default

    def bench_threads(self) -> int:
        """
        Worker threads for a benchmark matrix. Machine parallelism unless
        capped by the environment
        """
        val = self._get(Env.BENCH_THREADS)
        if val is None:
            return os.cpu_count() or 1
        try:
            threads = int(val)
        except ValueError:
            threads = 0
        if threads <= 0:
            raise PcnBenchConfigurationException(
                f'Env {Env.BENCH_THREADS.value} must be a positive integer. '
                f'Given value: \'{val}\'')
        return threads

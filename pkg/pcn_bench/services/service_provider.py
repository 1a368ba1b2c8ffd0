import os
from functools import cached_property
from typing import TYPE_CHECKING

from pcn_bench.helpers.utilities import SingletonMeta

if TYPE_CHECKING:
    from pcn_bench.services.bench_service import BenchService
    from pcn_bench.services.environment_service import EnvironmentService
    from pcn_bench.services.scenario_service import ScenarioService


class ServiceProvider(metaclass=SingletonMeta):
    @cached_property
    def env(self) -> 'EnvironmentService':
        from pcn_bench.services.environment_service import EnvironmentService
        return EnvironmentService(source=os.environ)

    @cached_property
    def scenario_service(self) -> 'ScenarioService':
        from pcn_bench.services.scenario_service import ScenarioService
        return ScenarioService()

    @cached_property
    def bench_service(self) -> 'BenchService':
        from pcn_bench.services.bench_service import BenchService
        return BenchService(env=self.env)

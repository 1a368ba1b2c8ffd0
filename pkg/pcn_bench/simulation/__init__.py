from pcn_bench.simulation.kernel import Event, EventKind, EventQueue
from pcn_bench.simulation.runner import Simulation, run
from pcn_bench.simulation.scenario import ScenarioConfig
from pcn_bench.simulation.sender import (
    FeedbackKind, SenderModel, aimd_on_feedback, optimal_window,
)
from pcn_bench.simulation.topology import (
    InteriorLink, Topology, build_meter, build_topology,
)
from pcn_bench.simulation.traffic import (
    CbrClock, PauseSchedule, cbr_next_departure,
)

__all__ = (
    'CbrClock', 'Event', 'EventKind', 'EventQueue', 'FeedbackKind',
    'InteriorLink', 'PauseSchedule', 'ScenarioConfig', 'SenderModel',
    'Simulation', 'Topology', 'aimd_on_feedback', 'build_meter',
    'build_topology', 'cbr_next_departure', 'optimal_window', 'run',
)

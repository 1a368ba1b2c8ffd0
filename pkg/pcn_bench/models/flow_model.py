from dataclasses import dataclass
from enum import Enum

from pcn_bench.helpers.constants import DEFAULT_PACKET_RATE
from pcn_bench.helpers.exceptions import PcnBenchConflictException
from pcn_bench.helpers.log_helper import get_logger
from pcn_bench.models.sim_time import SimTime

_LOG = get_logger(__name__)


class FlowState(str, Enum):
    REQUESTED = 'Requested'
    ADMITTED = 'Admitted'
    BLOCKED = 'Blocked'
    TERMINATED = 'Terminated'


LEGAL_TRANSITIONS: dict[FlowState, frozenset[FlowState]] = {
    FlowState.REQUESTED: frozenset((FlowState.ADMITTED, FlowState.BLOCKED)),
    FlowState.ADMITTED: frozenset((FlowState.TERMINATED,)),
    FlowState.BLOCKED: frozenset(),
    FlowState.TERMINATED: frozenset(),
}


@dataclass(slots=True, eq=False)
class Flow:
    id: int
    packet_rate: float = DEFAULT_PACKET_RATE
    state: FlowState = FlowState.REQUESTED
    admitted_at: SimTime | None = None
    terminated_at: SimTime | None = None
    requested_at: SimTime | None = None
    link_index: int = 0
    # True when the flow was removed by flow termination, not by finishing
    preempted: bool = False

    def can_transition(self, target: FlowState) -> bool:
        return target in LEGAL_TRANSITIONS[self.state]

    def transition(self, target: FlowState) -> None:
        if not self.can_transition(target):
            raise PcnBenchConflictException(
                f'Flow {self.id} can not move from {self.state.value} to '
                f'{target.value}')
        self.state = target

    def admit(self, now: SimTime) -> None:
        self.transition(FlowState.ADMITTED)
        self.admitted_at = now

    def block(self) -> None:
        self.transition(FlowState.BLOCKED)

    def terminate(self, now: SimTime, preempted: bool = False) -> None:
        if self.admitted_at is not None and now <= self.admitted_at:
            raise PcnBenchConflictException(
                f'Flow {self.id} can not terminate at {now} us, it was '
                f'admitted at {self.admitted_at} us')
        self.transition(FlowState.TERMINATED)
        self.terminated_at = now
        self.preempted = preempted

    @property
    def is_active(self) -> bool:
        return self.state is FlowState.ADMITTED

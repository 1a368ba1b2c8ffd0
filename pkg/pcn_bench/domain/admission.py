from dataclasses import dataclass
from enum import Enum

from pcn_bench.helpers.exceptions import PcnBenchConflictException
from pcn_bench.helpers.log_helper import get_logger
from pcn_bench.models import Flow, FlowState, SimTime
from pcn_bench.models.sim_time import ZERO

_LOG = get_logger(__name__)


class AdmissionDecision(str, Enum):
    ADMIT = 'Admit'
    BLOCK = 'Block'


@dataclass(frozen=True, slots=True)
class AdmissionSignal:
    decision: AdmissionDecision
    issued_at: SimTime
    cle_snapshot: float

    @classmethod
    def initial(cls) -> 'AdmissionSignal':
        """
        What an ingress assumes before its egress has reported anything
        """
        return cls(decision=AdmissionDecision.ADMIT, issued_at=ZERO,
                   cle_snapshot=0.0)


def ingress_admission(flow: Flow, latest_signal: AdmissionSignal,
                      now: SimTime | None = None) -> Flow:
    if flow.state is not FlowState.REQUESTED:
        raise PcnBenchConflictException(
            f'Only requested flows can be admitted or blocked. Flow '
            f'{flow.id} is {flow.state.value}')
    if latest_signal.decision is AdmissionDecision.ADMIT:
        flow.admit(latest_signal.issued_at if now is None else now)
    else:
        flow.block()
    _LOG.debug(f'Flow {flow.id}: {flow.state.value} '
               f'(cle={latest_signal.cle_snapshot:.4f})')
    return flow

import math
from enum import Enum
from typing import Iterable

from pcn_bench.helpers.constants import TerminationPolicy
from pcn_bench.helpers.exceptions import PcnBenchBadRequestException
from pcn_bench.helpers.log_helper import get_logger
from pcn_bench.models import Flow, LinkConfig, SimTime

_LOG = get_logger(__name__)


class PreCongestionState(str, Enum):
    NO_PRE_CONGESTION = 'NoPreCongestion'
    AR_PRE_CONGESTED = 'ArPreCongested'
    SR_PRE_CONGESTED = 'SrPreCongested'


def classify_precongestion(r: float, link: LinkConfig) -> PreCongestionState:
    if r < 0:
        raise PcnBenchBadRequestException(
            f'PCN traffic rate can not be negative: {r}')
    if r > link.supportable_rate:
        return PreCongestionState.SR_PRE_CONGESTED
    if r > link.admissible_rate:
        return PreCongestionState.AR_PRE_CONGESTED
    return PreCongestionState.NO_PRE_CONGESTION


def termination_count(r: float, supportable_rate: float,
                      per_flow_rate: float) -> int:
    """
    Minimal k such that r - k * per_flow_rate <= supportable_rate
    """
    if per_flow_rate <= 0:
        raise PcnBenchBadRequestException(
            f'Per-flow rate must be positive. Given value: {per_flow_rate}')
    if r <= supportable_rate:
        return 0
    k = max(0, math.ceil((r - supportable_rate) / per_flow_rate))
    # the estimate may be off by one after rounding
    while k > 0 and r - (k - 1) * per_flow_rate <= supportable_rate:
        k -= 1
    while r - k * per_flow_rate > supportable_rate:
        k += 1
    return k


def _termination_order(flows: Iterable[Flow],
                       policy: TerminationPolicy) -> list[Flow]:
    newest_first = policy is TerminationPolicy.NEWEST_FIRST
    return sorted(flows, key=lambda f: (f.admitted_at or 0, f.id),
                  reverse=newest_first)


def flow_termination(admitted: list[Flow], r: float, link: LinkConfig,
                     per_flow_rate: float, now: SimTime,
                     policy: TerminationPolicy = TerminationPolicy.NEWEST_FIRST
                     ) -> list[Flow]:
    """
    Terminates the fewest admitted flows that bring r back to the
    supportable rate, picked by policy. If the whole population is not
    enough, all of it is terminated
    """
    k = termination_count(r, link.supportable_rate, per_flow_rate)
    if not k:
        return []
    victims = _termination_order(admitted, policy)[:k]
    for flow in victims:
        flow.terminate(now, preempted=True)
    _LOG.debug(f'Terminated {len(victims)} flow(s) at rate {r:.0f} bps, '
               f'supportable {link.supportable_rate:.0f} bps')
    return victims

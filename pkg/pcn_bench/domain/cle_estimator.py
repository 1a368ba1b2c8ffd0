from dataclasses import dataclass

from pcn_bench.domain.admission import AdmissionDecision, AdmissionSignal
from pcn_bench.helpers.constants import (
    DEFAULT_ADMIT_THRESHOLD, DEFAULT_CLE_W,
)
from pcn_bench.helpers.exceptions import PcnBenchBadRequestException
from pcn_bench.models import SimTime


@dataclass(slots=True)
class CleEstimator:
    """
    Congestion level estimate of one ingress-egress path: an EWMA of the
    mark bits of packets seen at the egress. 0 means no pre-congestion,
    1 means every recent packet arrived marked
    """
    cle: float = 0.0
    cle_w: float = DEFAULT_CLE_W
    admit_threshold: float = DEFAULT_ADMIT_THRESHOLD

    def __post_init__(self):
        if not 0 < self.cle_w < 1:
            raise PcnBenchBadRequestException(
                f'CLE weight must be in (0, 1). Given value: {self.cle_w}')
        if not 0 < self.admit_threshold < 1:
            raise PcnBenchBadRequestException(
                f'Admit threshold must be in (0, 1). Given value: '
                f'{self.admit_threshold}')
        if not 0 <= self.cle <= 1:
            raise PcnBenchBadRequestException(
                f'CLE must be in [0, 1]. Given value: {self.cle}')


def cle_update(est: CleEstimator, thr_bit: int | bool) -> float:
    if thr_bit not in (0, 1):
        raise PcnBenchBadRequestException(
            f'Threshold bit must be 0 or 1. Given value: {thr_bit}')
    est.cle = int(thr_bit) * (1 - est.cle_w) + est.cle_w * est.cle
    return est.cle


def egress_feedback(est: CleEstimator, now: SimTime) -> AdmissionSignal:
    # ties block
    if est.cle >= est.admit_threshold:
        decision = AdmissionDecision.BLOCK
    else:
        decision = AdmissionDecision.ADMIT
    return AdmissionSignal(decision=decision, issued_at=now,
                           cle_snapshot=est.cle)

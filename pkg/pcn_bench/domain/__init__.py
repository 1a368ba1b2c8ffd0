from pcn_bench.domain.admission import (
    AdmissionDecision, AdmissionSignal, ingress_admission,
)
from pcn_bench.domain.cle_estimator import (
    CleEstimator, cle_update, egress_feedback,
)
from pcn_bench.domain.interior import interior_process
from pcn_bench.domain.precongestion import (
    PreCongestionState, classify_precongestion, flow_termination,
    termination_count,
)

__all__ = (
    'AdmissionDecision', 'AdmissionSignal', 'CleEstimator',
    'PreCongestionState', 'classify_precongestion', 'cle_update',
    'egress_feedback', 'flow_termination', 'ingress_admission',
    'interior_process', 'termination_count',
)

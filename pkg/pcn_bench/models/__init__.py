from pcn_bench.models.decision_model import MeterDecision
from pcn_bench.models.flow_model import Flow, FlowState, LEGAL_TRANSITIONS
from pcn_bench.models.link_model import LinkConfig
from pcn_bench.models.packet_model import (
    EcnClass, EcnCodepoint, Packet, Priority, classify_codepoint,
)
from pcn_bench.models.sim_time import SimTime

__all__ = (
    'EcnClass', 'EcnCodepoint', 'Flow', 'FlowState', 'LEGAL_TRANSITIONS',
    'LinkConfig', 'MeterDecision', 'Packet', 'Priority', 'SimTime',
    'classify_codepoint',
)

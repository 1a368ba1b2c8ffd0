import random

from pcn_bench.helpers.constants import Technique
from pcn_bench.metering.red import RedMeter, RedState, red_on_arrival
from pcn_bench.models import EcnClass, MeterDecision, Packet, SimTime


def ecn_on_arrival(state: RedState, pkt: Packet, queue_len: int,
                   rng: random.Random) -> tuple[MeterDecision, Packet]:
    """
    RED decides; a mark becomes CE on ECN-capable packets and a drop on
    packets that can not carry it
    """
    decision = red_on_arrival(state, pkt, queue_len, rng)
    if decision is not MeterDecision.MARK:
        return decision, pkt
    match pkt.ecn_class:
        case EcnClass.NOT_ECN_CAPABLE:
            return MeterDecision.DROP, pkt
        case EcnClass.ECN_CAPABLE:
            pkt.set_congestion_experienced()
    return MeterDecision.MARK, pkt


class EcnMeter(RedMeter):
    technique = Technique.ECN

    def on_arrival(self, packet: Packet, now: SimTime,
                   queue_len: int) -> MeterDecision:
        decision, _ = ecn_on_arrival(self.state, packet, queue_len,
                                     self._rng)
        return decision

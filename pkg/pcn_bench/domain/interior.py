from pcn_bench.metering.base import Meter
from pcn_bench.models import MeterDecision, Packet, SimTime


def interior_process(pkt: Packet, meter: Meter, now: SimTime,
                     queue_len: int = 0) -> Packet | None:
    """
    Applies the link's meter to a packet crossing an interior node. Returns
    the packet to forward, or None when the meter drops it
    """
    match meter.on_arrival(pkt, now, queue_len):
        case MeterDecision.DROP:
            return None
        case MeterDecision.MARK:
            pkt.mark_pcn()
    return pkt

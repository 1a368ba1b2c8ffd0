import math
import random
from collections import deque
from dataclasses import dataclass, field

from pcn_bench.domain import PreCongestionState, interior_process
from pcn_bench.helpers.constants import (
    BITS_PER_BYTE, MICROS_PER_SECOND, Technique,
)
from pcn_bench.helpers.exceptions import PcnBenchBadRequestException
from pcn_bench.helpers.log_helper import get_logger
from pcn_bench.metering import (
    AdditionalBufferMeter, AdditionalBufferState, BandwidthMeter,
    BandwidthMeterState, EcnMeter, Meter, RedMeter, RedState,
    TokenBucketMeter, TokenBucketState,
)
from pcn_bench.models import LinkConfig, Packet, SimTime
from pcn_bench.simulation.scenario import ScenarioConfig

_LOG = get_logger(__name__)

# ingress -> interior node -> egress
PATH_HOPS = 2


def meter_rng(seed: int) -> random.Random:
    """
    Meter coin flips draw from their own stream so that every technique
    sees the same sessions for a seed
    """
    return random.Random(f'{seed}:meters')


def build_meter(link: LinkConfig, cfg: ScenarioConfig,
                rng: random.Random) -> Meter:
    match cfg.technique:
        case Technique.RED | Technique.ECN:
            state = RedState(
                min_thr=cfg.red_min_thr, max_thr=cfg.red_max_thr,
                max_p=cfg.red_max_p, w_q=cfg.red_w_q,
            )
            meter_cls = EcnMeter if cfg.technique is Technique.ECN \
                else RedMeter
            return meter_cls(state, rng)
        case Technique.TB:
            fill_rate = link.admissible_rate * cfg.tb_rate_fraction \
                / BITS_PER_BYTE
            capacity = fill_rate * cfg.tb_depth
            return TokenBucketMeter(TokenBucketState(
                capacity=capacity,
                fill_rate=fill_rate,
                mark_threshold=capacity * cfg.tb_threshold_fraction,
                burst_length=cfg.tb_depth,
                generating_rate=fill_rate,
            ))
        case Technique.BM:
            return BandwidthMeter(BandwidthMeterState(
                mi=cfg.bm_mi,
                b_thr=link.admissible_rate * cfg.bm_threshold_fraction,
            ))
        case Technique.AB:
            return AdditionalBufferMeter(AdditionalBufferState.for_rates(
                admissible_rate=link.admissible_rate,
                objective_rate=link.objective_rate,
                buffer_capacity=cfg.ab_buffer_capacity,
                mi=cfg.bm_mi,
            ))
    raise PcnBenchBadRequestException(
        f'Unknown technique: {cfg.technique}')


@dataclass(eq=False)
class InteriorLink:
    """
    One interior link: a meter in front of a buffer in front of a
    transmitter. Non-buffering meters share a drop-tail FIFO
    """
    index: int
    config: LinkConfig
    meter: Meter
    queue_limit: int
    rate_estimator: BandwidthMeterState
    fifo: deque[Packet] = field(default_factory=deque)
    in_service: Packet | None = None
    state: PreCongestionState = PreCongestionState.NO_PRE_CONGESTION

    @property
    def busy(self) -> bool:
        return self.in_service is not None

    def backlog(self) -> int:
        """
        Packets waiting plus the one being transmitted
        """
        waiting = len(self.meter) if self.meter.owns_buffer \
            else len(self.fifo)
        return waiting + self.busy

    def transmission_time(self, packet: Packet) -> int:
        return math.ceil(packet.size_bytes * BITS_PER_BYTE *
                         MICROS_PER_SECOND / self.config.capacity_bps)

    def accept(self, packet: Packet, now: SimTime) -> Packet | None:
        """
        Meters and buffers an arriving packet. None means it was dropped,
        by the meter or by a full buffer
        """
        forwarded = interior_process(packet, self.meter, now, self.backlog())
        if forwarded is None or self.meter.owns_buffer:
            return forwarded
        if len(self.fifo) >= self.queue_limit:
            return None
        self.fifo.append(forwarded)
        return forwarded

    def next_packet(self) -> Packet | None:
        if self.meter.owns_buffer:
            return self.meter.schedule_next()
        return self.fifo.popleft() if self.fifo else None


@dataclass(eq=False)
class Topology:
    links: list[InteriorLink]
    ingress: str = 'ingress'
    egress: str = 'egress'

    @property
    def total_capacity_bps(self) -> float:
        return sum(link.config.capacity_bps for link in self.links)


def build_topology(cfg: ScenarioConfig,
                   rng: random.Random | None = None) -> Topology:
    if cfg.n_links <= 0:
        raise PcnBenchBadRequestException(
            f'Topology needs at least one link. Given n_links={cfg.n_links}')
    rng = rng or meter_rng(cfg.seed)
    # thresholds and service rate belong to the PCN class share of the link
    share = cfg.bandwidth_bps / cfg.n_links * cfg.pcn_share
    links = []
    for index in range(cfg.n_links):
        config = LinkConfig.from_fractions(
            capacity_bps=share,
            ar_fraction=cfg.ar_fraction,
            sr_fraction=cfg.sr_fraction,
            or_fraction=cfg.or_fraction,
        )
        links.append(InteriorLink(
            index=index,
            config=config,
            meter=build_meter(config, cfg, rng),
            queue_limit=cfg.queue_limit,
            rate_estimator=BandwidthMeterState(
                mi=cfg.measure_interval, b_thr=config.supportable_rate),
        ))
    _LOG.debug(f'Built {cfg.n_links} link(s) of {share:.0f} bps for '
               f'{cfg.technique.value}')
    return Topology(links=links)

"""
One scenario, end to end: sessions request admission at the ingress, send
through a metered interior link, the egress folds marks into the path's
congestion level estimate and signals the ingress back.
"""
import hashlib
import random
from dataclasses import dataclass
from typing import Callable

from pcn_bench.domain import (
    AdmissionDecision, AdmissionSignal, CleEstimator, PreCongestionState,
    classify_precongestion, cle_update, egress_feedback, flow_termination,
    ingress_admission,
)
from pcn_bench.helpers.constants import MICROS_PER_SECOND, SenderMode
from pcn_bench.helpers.exceptions import PcnBenchInternalException
from pcn_bench.helpers.log_helper import get_logger
from pcn_bench.metering import bm_measure, bm_record
from pcn_bench.metrics.formulas import throughput
from pcn_bench.metrics.record import MetricsRecord
from pcn_bench.models import EcnCodepoint, Flow, Packet, SimTime
from pcn_bench.models.sim_time import ZERO, from_seconds, to_seconds
from pcn_bench.simulation.kernel import Event, EventKind, EventQueue
from pcn_bench.simulation.scenario import ScenarioConfig
from pcn_bench.simulation.sender import (
    FeedbackKind, SenderModel, aimd_on_feedback,
)
from pcn_bench.simulation.topology import (
    PATH_HOPS, InteriorLink, build_topology, meter_rng,
)
from pcn_bench.simulation.traffic import (
    CbrClock, PauseSchedule, cbr_next_departure,
)

_LOG = get_logger(__name__)

# smoothed RTT gain
SRTT_GAIN = 0.125


@dataclass(slots=True, eq=False)
class Session:
    flow: Flow
    sender: SenderModel
    codepoint: EcnCodepoint = EcnCodepoint.ECT0
    clock: CbrClock | None = None
    in_flight: int = 0
    srtt: float = 0.0
    recovery_until: SimTime = ZERO

    @property
    def active(self) -> bool:
        return self.flow.is_active


class Simulation:
    def __init__(self, cfg: ScenarioConfig, keep_trace: bool = False):
        self.cfg = cfg
        # sessions draw from the workload stream, meters from their own
        self.rng = random.Random(cfg.seed)
        self.queue = EventQueue()
        self.topology = build_topology(cfg, meter_rng(cfg.seed))
        self.pauses = PauseSchedule.from_seconds(cfg.pause_interval,
                                                 cfg.pause_length)
        self.end = from_seconds(cfg.duration)
        self.prop_us = from_seconds(cfg.prop_delay)
        self.feedback_us = from_seconds(cfg.feedback_delay)
        self.measure_us = max(1, from_seconds(cfg.measure_interval))
        self.base_rtt_us = 2 * PATH_HOPS * self.prop_us

        links = self.topology.links
        self.estimators = [
            CleEstimator(cle_w=cfg.cle_w,
                         admit_threshold=cfg.admit_threshold)
            for _ in links
        ]
        # what each ingress believes vs what each egress last sent
        self.signals = [AdmissionSignal.initial() for _ in links]
        self.egress_decisions = [AdmissionDecision.ADMIT for _ in links]
        self.active_per_link = [0 for _ in links]
        # egress packets per path since the last measure tick
        self.egress_seen = [0 for _ in links]

        self.flows: list[Flow] = []
        self.sessions: dict[int, Session] = {}
        self.draining = False
        self.keep_trace = keep_trace
        self.trace: list[tuple[int, int, EventKind]] = []
        self._digest = hashlib.sha256()
        self._packet_id = 0

        self.tsp = 0
        self.tap = 0
        self.delivered = 0
        self.dropped = 0
        self.marked = 0
        self.admitted = 0
        self.blocked = 0
        self.terminated = 0
        self.deliveries: list[tuple[SimTime, int]] = []
        self.rtt_sum = 0
        self.rtt_count = 0

        self._handlers: dict[EventKind, Callable[[Event], None]] = {
            EventKind.PACKET_ARRIVAL: self._on_packet_arrival,
            EventKind.PACKET_DEPARTURE: self._on_packet_departure,
            EventKind.EGRESS_ARRIVAL: self._on_egress_arrival,
            EventKind.ACK_ARRIVAL: self._on_ack_arrival,
            EventKind.FLOW_REQUEST: self._on_flow_request,
            EventKind.FLOW_END: self._on_flow_end,
            EventKind.FEEDBACK_SIGNAL: self._on_feedback_signal,
            EventKind.GENERATOR_TICK: self._on_generator_tick,
            EventKind.MEASURE_TICK: self._on_measure_tick,
            EventKind.PAUSE_START: self._on_pause_start,
            EventKind.PAUSE_END: self._on_pause_end,
            EventKind.SIM_END: self._on_sim_end,
        }

    # setup

    def _schedule_initial(self) -> None:
        q = self.queue
        q.schedule(self.end, EventKind.SIM_END)
        for _ in range(self.cfg.n_connections):
            q.schedule(ZERO, EventKind.FLOW_REQUEST, False)
        self._schedule_poisson_request()
        if self.measure_us < self.end:
            q.schedule(SimTime(self.measure_us), EventKind.MEASURE_TICK)
        for start in self.pauses.starts_before(self.end):
            q.schedule(start, EventKind.PAUSE_START)
            q.schedule(SimTime(start + self.pauses.length_us),
                       EventKind.PAUSE_END)

    def _schedule_poisson_request(self) -> None:
        if self.cfg.session_rate <= 0:
            return
        gap = from_seconds(self.rng.expovariate(self.cfg.session_rate))
        at = self.queue.now + gap
        if at < self.end:
            self.queue.schedule(SimTime(at), EventKind.FLOW_REQUEST, True)

    # sessions

    def _pick_link(self) -> int:
        """
        Least loaded path among those whose ingress last heard Admit, least
        loaded overall when every path is blocked
        """
        counts = self.active_per_link
        candidates = [
            i for i, signal in enumerate(self.signals)
            if signal.decision is AdmissionDecision.ADMIT
        ] or range(len(counts))
        return min(candidates, key=lambda i: (counts[i], i))

    def _on_flow_request(self, event: Event) -> None:
        if self.draining:
            return
        now = self.queue.now
        # drawn whether or not the request is admitted
        holding = max(1, from_seconds(
            self.rng.expovariate(1 / self.cfg.holding_time)))
        ect = self.rng.random() < self.cfg.ect_fraction
        link_index = self._pick_link()
        flow = Flow(id=len(self.flows), packet_rate=self.cfg.packet_rate,
                    requested_at=now, link_index=link_index)
        self.flows.append(flow)
        ingress_admission(flow, self.signals[link_index], now)
        if flow.is_active:
            self.admitted += 1
            self._start_session(
                flow, holding,
                EcnCodepoint.ECT0 if ect else EcnCodepoint.NOT_ECT)
        else:
            self.blocked += 1
        if event.payload:
            self._schedule_poisson_request()

    def _start_session(self, flow: Flow, holding: int,
                       codepoint: EcnCodepoint) -> None:
        now = self.queue.now
        link = self.topology.links[flow.link_index]
        session = Session(
            flow=flow,
            sender=SenderModel(
                bandwidth_bps=link.config.capacity_bps,
                delay_product=to_seconds(self.base_rtt_us),
                packet_size=self.cfg.packet_size,
                mode=self.cfg.sender_mode,
            ),
            codepoint=codepoint,
            srtt=float(self.base_rtt_us),
        )
        self.sessions[flow.id] = session
        self.active_per_link[flow.link_index] += 1

        if now + holding < self.end:
            self.queue.schedule(SimTime(now + holding), EventKind.FLOW_END,
                                flow.id)

        if self.cfg.sender_mode is SenderMode.CBR:
            start = self.pauses.pause_end(now) or now
            session.clock = CbrClock(flow.packet_rate, start)
            self.queue.schedule(start, EventKind.GENERATOR_TICK, flow.id)
        else:
            self._pump(session)

    def _close_session(self, flow: Flow) -> None:
        self.active_per_link[flow.link_index] -= 1

    def _on_flow_end(self, event: Event) -> None:
        flow = self.flows[event.payload]
        if not flow.is_active:
            return
        flow.terminate(self.queue.now)
        self._close_session(flow)

    # sending

    def _send(self, session: Session) -> None:
        now = self.queue.now
        self._packet_id += 1
        packet = Packet(
            id=self._packet_id,
            flow_id=session.flow.id,
            size_bytes=self.cfg.packet_size,
            codepoint=session.codepoint,
            created_at=now,
            sent_at=now,
            link_index=session.flow.link_index,
        )
        self.tsp += 1
        session.in_flight += 1
        self.queue.schedule_in(self.prop_us, EventKind.PACKET_ARRIVAL, packet)

    def _pump(self, session: Session) -> None:
        """
        Fills the AIMD window
        """
        if self.draining or not session.active or \
                self.pauses.is_paused(self.queue.now):
            return
        while session.in_flight < int(session.sender.window):
            self._send(session)

    def _on_generator_tick(self, event: Event) -> None:
        session = self.sessions[event.payload]
        if self.draining or not session.active:
            return
        self._send(session)
        departure = cbr_next_departure(session.clock, self.queue.now,
                                       self.pauses)
        if departure < self.end:
            self.queue.schedule(departure, EventKind.GENERATOR_TICK,
                                event.payload)

    def _on_pause_start(self, event: Event) -> None:
        _LOG.debug(f'Generators paused at {self.queue.now} us')

    def _on_pause_end(self, event: Event) -> None:
        if self.draining or self.cfg.sender_mode is SenderMode.CBR:
            return
        for session in self.sessions.values():
            self._pump(session)

    # interior

    def _on_packet_arrival(self, event: Event) -> None:
        packet: Packet = event.payload
        now = self.queue.now
        link = self.topology.links[packet.link_index]
        bm_record(link.rate_estimator, now, packet.size_bytes)
        if link.accept(packet, now) is None:
            self._drop(packet)
            return
        if not link.busy:
            self._start_transmission(link)

    def _start_transmission(self, link: InteriorLink) -> None:
        packet = link.next_packet()
        if packet is None:
            return
        link.in_service = packet
        self.queue.schedule_in(link.transmission_time(packet),
                               EventKind.PACKET_DEPARTURE, link.index)

    def _on_packet_departure(self, event: Event) -> None:
        link = self.topology.links[event.payload]
        packet, link.in_service = link.in_service, None
        self.queue.schedule_in(self.prop_us, EventKind.EGRESS_ARRIVAL, packet)
        self._start_transmission(link)

    def _drop(self, packet: Packet) -> None:
        self.dropped += 1
        if self.cfg.sender_mode is SenderMode.CBR:
            self.sessions[packet.flow_id].in_flight -= 1
            return
        self.queue.schedule(SimTime(packet.sent_at + self.base_rtt_us),
                            EventKind.ACK_ARRIVAL,
                            (packet, FeedbackKind.LOSS))

    # egress

    def _on_egress_arrival(self, event: Event) -> None:
        packet: Packet = event.payload
        now = self.queue.now
        self.delivered += 1
        self.deliveries.append((now, packet.size_bytes))
        self.marked += packet.pcn_marked

        index = packet.link_index
        self.egress_seen[index] += 1
        cle_update(self.estimators[index], packet.pcn_marked)
        self._report_path(index, now)

        ack_at = SimTime(now + PATH_HOPS * self.prop_us)
        if self.cfg.sender_mode is SenderMode.CBR:
            # CBR senders ignore feedback, the ack only settles the books
            self._settle(self.sessions[packet.flow_id], packet, ack_at)
            return
        echo = FeedbackKind.MARK_ECHO \
            if packet.codepoint is EcnCodepoint.CE else FeedbackKind.ACK
        self.queue.schedule(ack_at, EventKind.ACK_ARRIVAL, (packet, echo))

    def _report_path(self, index: int, now: SimTime) -> None:
        """
        Sends the path's decision to its ingress when it changed
        """
        signal = egress_feedback(self.estimators[index], now)
        if signal.decision is not self.egress_decisions[index]:
            self.egress_decisions[index] = signal.decision
            self.queue.schedule_in(self.feedback_us,
                                   EventKind.FEEDBACK_SIGNAL,
                                   (index, signal))

    def _on_feedback_signal(self, event: Event) -> None:
        index, signal = event.payload
        self.signals[index] = signal
        _LOG.debug(f'Path {index}: {signal.decision.value} '
                   f'(cle={signal.cle_snapshot:.4f})')

    # sender feedback

    def _settle(self, session: Session, packet: Packet,
                acked_at: SimTime) -> None:
        session.in_flight -= 1
        self.tap += 1
        sample = acked_at - packet.sent_at
        self.rtt_sum += sample
        self.rtt_count += 1
        session.srtt += SRTT_GAIN * (sample - session.srtt)

    def _on_ack_arrival(self, event: Event) -> None:
        packet, kind = event.payload
        now = self.queue.now
        session = self.sessions[packet.flow_id]
        if kind is FeedbackKind.LOSS:
            session.in_flight -= 1
        else:
            self._settle(session, packet, now)
        if not session.active:
            return
        if kind is FeedbackKind.ACK:
            aimd_on_feedback(session.sender, kind)
        elif now >= session.recovery_until:
            # one reduction per round trip
            session.recovery_until = SimTime(now + int(session.srtt))
            aimd_on_feedback(session.sender, kind)
        self._pump(session)

    # pre-congestion

    def _on_measure_tick(self, event: Event) -> None:
        if self.draining:
            return
        now = self.queue.now
        for link in self.topology.links:
            self._measure_link(link, now)
        self._decay_idle_paths(now)
        following = now + self.measure_us
        if following < self.end:
            self.queue.schedule(SimTime(following), EventKind.MEASURE_TICK)

    def _measure_link(self, link: InteriorLink, now: SimTime) -> None:
        rate = bm_measure(link.rate_estimator, now)
        state = classify_precongestion(rate, link.config)
        if state is not link.state:
            _LOG.debug(f'Link {link.index}: {link.state.value} -> '
                       f'{state.value} at {rate:.0f} bps')
            link.state = state
        if state is not PreCongestionState.SR_PRE_CONGESTED:
            return
        admitted = [
            f for f in self.flows
            if f.link_index == link.index and f.is_active
            and f.admitted_at < now
        ]
        if not admitted:
            return
        victims = flow_termination(
            admitted, rate, link.config, rate / len(admitted), now,
            self.cfg.termination_policy)
        for flow in victims:
            self._close_session(flow)
        self.terminated += len(victims)

    def _decay_idle_paths(self, now: SimTime) -> None:
        """
        A path that delivered nothing during the interval counts as one
        unmarked packet, so a drained blocked path reopens
        """
        for index, seen in enumerate(self.egress_seen):
            if not seen:
                cle_update(self.estimators[index], 0)
                self._report_path(index, now)
            self.egress_seen[index] = 0

    def _on_sim_end(self, event: Event) -> None:
        self.draining = True

    # loop

    def run(self) -> MetricsRecord:
        cfg = self.cfg
        _LOG.info(f'Starting {cfg.technique.value} at {cfg.bandwidth_bps} '
                  f'bps, seed {cfg.seed}, {cfg.duration} s')
        self._schedule_initial()
        while (event := self.queue.pop_next()) is not None:
            self._digest.update(
                f'{event.time}:{event.seq}:{event.kind.value};'.encode())
            if self.keep_trace:
                self.trace.append((event.time, event.seq, event.kind))
            self._handlers[event.kind](event)
        record = self._record()
        _LOG.info(f'Finished {cfg.technique.value} at {cfg.bandwidth_bps} '
                  f'bps, seed {cfg.seed}: sent {record.tsp}, lost '
                  f'{record.lp}, admitted {record.admitted_sessions}')
        return record

    def _check_conservation(self) -> None:
        if self.tsp != self.delivered + self.dropped:
            raise PcnBenchInternalException(
                f'Sent {self.tsp} packets but delivered {self.delivered} '
                f'and dropped {self.dropped}')
        if self.tap != self.delivered:
            raise PcnBenchInternalException(
                f'Acknowledged {self.tap} packets but delivered '
                f'{self.delivered}')

    def mean_rtt_us(self) -> float:
        return self.rtt_sum / self.rtt_count if self.rtt_count else 0.0

    def throughput_mbps(self) -> float:
        """
        Bytes delivered per window of one mean RTT, averaged over the
        whole windows inside the run
        """
        if not self.end or not self.rtt_count:
            return 0.0
        window_us = max(1, round(self.mean_rtt_us()))
        windows = self.end // window_us
        if not windows:
            delivered = sum(size for t, size in self.deliveries
                            if t < self.end)
            bps = throughput(delivered, to_seconds(self.end))
            return round(bps / MICROS_PER_SECOND, 2)
        buckets = [0] * windows
        for t, size in self.deliveries:
            index = t // window_us
            if index < windows:
                buckets[index] += size
        window_s = window_us / MICROS_PER_SECOND
        rates = [throughput(b, window_s) for b in buckets]
        return round(sum(rates) / windows / MICROS_PER_SECOND, 2)

    def _record(self) -> MetricsRecord:
        self._check_conservation()
        return MetricsRecord.from_counters(
            technique=self.cfg.technique,
            bandwidth_bps=self.cfg.bandwidth_bps,
            seed=self.cfg.seed,
            tsp=self.tsp,
            tap=self.tap,
            throughput_mbps=self.throughput_mbps(),
            admitted=self.admitted,
            blocked=self.blocked,
            terminated=self.terminated,
            marked_packets=self.marked,
            mean_rtt_s=round(to_seconds(self.mean_rtt_us()), 6),
            trace_digest=self._digest.hexdigest(),
        )


def run(cfg: ScenarioConfig) -> MetricsRecord:
    return Simulation(cfg).run()

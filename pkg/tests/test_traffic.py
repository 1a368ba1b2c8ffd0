import random

import pytest

from pcn_bench.helpers.constants import Technique
from pcn_bench.helpers.exceptions import PcnBenchBadRequestException
from pcn_bench.metering import (
    AdditionalBufferMeter, BandwidthMeter, EcnMeter, RedMeter,
    TokenBucketMeter,
)
from pcn_bench.models import Packet, SimTime
from pcn_bench.models.sim_time import from_seconds
from pcn_bench.simulation import (
    CbrClock, PauseSchedule, ScenarioConfig, build_topology,
    cbr_next_departure,
)
from pcn_bench.simulation.topology import meter_rng


@pytest.mark.parametrize('bandwidth, links, share', [
    (300_000_000, 5, 60_000_000),
    (500_000_000, 5, 100_000_000),
    (50_000_000, 1, 50_000_000),
])
def test_topology_shares_bandwidth_equally(bandwidth, links, share):
    topology = build_topology(ScenarioConfig(bandwidth_bps=bandwidth,
                                             n_links=links, pcn_share=1.0))
    assert len(topology.links) == links
    assert all(link.config.capacity_bps == share for link in topology.links)
    assert topology.total_capacity_bps == pytest.approx(bandwidth)
    assert topology.links[0].config.admissible_rate == pytest.approx(
        0.7 * share)


def test_pcn_class_gets_its_share_of_every_link():
    topology = build_topology(ScenarioConfig(bandwidth_bps=30_000_000,
                                             pcn_share=0.1))
    assert topology.total_capacity_bps == pytest.approx(3_000_000)
    config = topology.links[0].config
    assert config.capacity_bps == pytest.approx(600_000)
    assert config.supportable_rate == pytest.approx(540_000)


@pytest.mark.parametrize('technique, meter_cls', [
    (Technique.RED, RedMeter),
    (Technique.ECN, EcnMeter),
    (Technique.TB, TokenBucketMeter),
    (Technique.BM, BandwidthMeter),
    (Technique.AB, AdditionalBufferMeter),
])
def test_topology_builds_one_meter_per_link(technique, meter_cls):
    topology = build_topology(ScenarioConfig(technique=technique))
    meters = [link.meter for link in topology.links]
    assert all(type(m) is meter_cls for m in meters)
    assert len({id(m) for m in meters}) == len(meters)


def test_token_bucket_derived_from_admissible_rate():
    topology = build_topology(ScenarioConfig(
        technique=Technique.TB, bandwidth_bps=50_000_000, pcn_share=1.0,
        tb_rate_fraction=0.5))
    state = topology.links[0].meter.state
    assert state.fill_rate == pytest.approx(3_500_000 / 8)
    assert state.capacity == pytest.approx(3_500_000 / 8 * 0.05)
    assert state.tokens == 0


def test_fifo_link_drops_at_queue_limit():
    topology = build_topology(ScenarioConfig(
        technique=Technique.BM, n_links=1, queue_limit=2))
    link = topology.links[0]
    now = from_seconds(1)
    accepted = [link.accept(Packet(id=i, flow_id=1), now) for i in range(3)]
    assert accepted[2] is None
    assert link.backlog() == 2
    assert link.next_packet().id == 0


def test_transmission_time_rounds_up():
    topology = build_topology(ScenarioConfig(bandwidth_bps=3_000_000,
                                             n_links=1, pcn_share=1.0))
    # 8320 bits at 3 Mbps is 2773.33 us
    assert topology.links[0].transmission_time(Packet(id=1, flow_id=1)) \
        == 2774


def test_cbr_spacing_carries_remainder():
    clock = CbrClock(15, SimTime(0))
    departures = []
    now = SimTime(0)
    for _ in range(15):
        now = cbr_next_departure(clock, now)
        departures.append(now)
    gaps = {b - a for a, b in zip([0] + departures, departures)}
    assert gaps <= {66_666, 66_667}
    assert departures[0] == 66_666
    assert departures[-1] == 1_000_000


def test_cbr_long_run_rate_is_exact():
    clock = CbrClock(15, SimTime(0))
    now = SimTime(0)
    sent = 0
    while now < from_seconds(10):
        now = cbr_next_departure(clock, now)
        sent += 1
    # within one packet over ten seconds
    assert abs(sent - 150) <= 1


def test_cbr_rate_one_is_one_second():
    clock = CbrClock(1, SimTime(0))
    assert cbr_next_departure(clock, SimTime(0)) == 1_000_000


def test_cbr_departure_in_pause_moves_to_pause_end():
    pauses = PauseSchedule.from_seconds(interval=300, length=4)
    clock = CbrClock(1, from_seconds(299.5))
    departure = cbr_next_departure(clock, from_seconds(299.5), pauses)
    assert departure == from_seconds(304)
    assert cbr_next_departure(clock, departure, pauses) == from_seconds(305)


def test_cbr_rejects_non_positive_rate():
    with pytest.raises(PcnBenchBadRequestException):
        CbrClock(0, SimTime(0))


def test_pause_schedule():
    pauses = PauseSchedule.from_seconds(interval=30, length=4)
    assert not pauses.is_paused(from_seconds(29.9))
    assert pauses.is_paused(from_seconds(30))
    assert pauses.pause_end(from_seconds(33)) == from_seconds(34)
    assert not pauses.is_paused(from_seconds(34))
    assert pauses.starts_before(from_seconds(61)) == [
        from_seconds(30), from_seconds(60)]
    assert not PauseSchedule.from_seconds(0, 4).enabled


def test_topology_meters_share_the_scenario_rng():
    rng = random.Random(1)
    topology = build_topology(ScenarioConfig(), rng)
    assert all(link.meter._rng is rng for link in topology.links)


def test_meter_stream_is_apart_from_the_workload_stream():
    meters, workload = meter_rng(1), random.Random(1)
    assert [meters.random() for _ in range(3)] != \
        [workload.random() for _ in range(3)]
    assert meter_rng(1).random() == meter_rng(1).random()

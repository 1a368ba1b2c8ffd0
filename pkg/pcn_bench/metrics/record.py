from dataclasses import asdict, dataclass

from typing_extensions import Self

from pcn_bench.helpers.constants import Technique
from pcn_bench.helpers.exceptions import PcnBenchInternalException
from pcn_bench.metrics.formulas import loss_stats


@dataclass(frozen=True, slots=True)
class MetricsRecord:
    technique: Technique
    bandwidth_bps: int
    seed: int
    tsp: int
    tap: int
    lp: int
    drop_rate_pct: float
    throughput_mbps: float
    admitted_sessions: int
    blocked_sessions: int
    terminated_sessions: int
    marked_packets: int = 0
    mean_rtt_s: float = 0.0
    trace_digest: str = ''

    def __post_init__(self):
        if self.lp != self.tsp - self.tap or self.lp < 0:
            raise PcnBenchInternalException(
                f'Lost packets {self.lp} do not match sent {self.tsp} minus '
                f'acknowledged {self.tap}')
        if not 0 <= self.drop_rate_pct <= 100:
            raise PcnBenchInternalException(
                f'Drop rate {self.drop_rate_pct} is outside [0, 100]')

    @classmethod
    def from_counters(cls, technique: Technique, bandwidth_bps: int,
                      seed: int, tsp: int, tap: int, throughput_mbps: float,
                      admitted: int, blocked: int, terminated: int,
                      **extra) -> Self:
        lp, drop_rate = loss_stats(tsp, tap)
        return cls(
            technique=technique, bandwidth_bps=bandwidth_bps, seed=seed,
            tsp=tsp, tap=tap, lp=lp, drop_rate_pct=drop_rate,
            throughput_mbps=throughput_mbps, admitted_sessions=admitted,
            blocked_sessions=blocked, terminated_sessions=terminated,
            **extra
        )

    @property
    def bandwidth_mbps(self) -> float:
        return self.bandwidth_bps / 1_000_000

    def to_dict(self) -> dict:
        result = asdict(self)
        result['technique'] = self.technique.value
        return result

from pcn_bench.metering.additional_buffer import (
    AbVerdict, AdditionalBufferMeter, AdditionalBufferState,
    ab_compute_threshold, ab_on_arrival, ab_schedule_next, ab_weights,
)
from pcn_bench.metering.bandwidth_meter import (
    BandwidthMeter, BandwidthMeterState, bm_measure, bm_on_arrival,
    bm_record,
)
from pcn_bench.metering.base import Meter
from pcn_bench.metering.ecn import EcnMeter, ecn_on_arrival
from pcn_bench.metering.red import (
    RedMeter, RedState, red_base_probability, red_marking_probability,
    red_on_arrival, red_update_avg,
)
from pcn_bench.metering.token_bucket import (
    TokenBucketMeter, TokenBucketState, tb_on_arrival, tb_refill,
)

__all__ = (
    'AbVerdict', 'AdditionalBufferMeter', 'AdditionalBufferState',
    'BandwidthMeter', 'BandwidthMeterState', 'EcnMeter', 'Meter', 'RedMeter',
    'RedState', 'TokenBucketMeter', 'TokenBucketState', 'ab_compute_threshold',
    'ab_on_arrival', 'ab_schedule_next', 'ab_weights', 'bm_measure',
    'bm_on_arrival', 'bm_record', 'ecn_on_arrival', 'red_base_probability',
    'red_marking_probability', 'red_on_arrival', 'red_update_avg',
    'tb_on_arrival', 'tb_refill',
)

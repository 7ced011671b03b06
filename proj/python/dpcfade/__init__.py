"""Dirty paper coding over resizing/fading channels.

Achievable rates, outage probabilities and broadcast rate regions for
dirty paper coding when a random unit-mean power gain, known only to the
decoder, multiplies signal plus interference.
"""

from ._core import (
    BroadcastConfig,
    BroadcastUser,
    ChannelConfig,
    DivergenceError,
    DpcParams,
    Expectation,
    ExpectationEngine,
    FadingKind,
    FadingModel,
    HighSnrExpansion,
    LowSnrExpansion,
    Moments,
    OutageSpec,
    PowerAllocation,
    RegionBoundary,
    RegionPoint,
    TdParams,
    UnsupportedOperation,
    capacity_known_interference,
    conditional_rate,
    costa_capacity,
    dpc_alpha_for_gain,
    dpc_outage_for_rates,
    dpc_rate_point_k,
    dpc_region,
    dpc_supports,
    effective_gains,
    equivalent_unfaded_gains,
    expand_high_snr,
    expand_low_snr,
    gap,
    gap_bound,
    gap_bound_max,
    min_outage_probability,
    optimal_alpha,
    optimal_alpha_outage,
    outage_gain_threshold,
    outage_probability,
    rate_cdf,
    rate_dpc,
    rate_dpc_integrand,
    rate_general,
    rate_integrand,
    rate_via_mi_oracle,
    td_rate_point,
    td_region,
    verify_dominance,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]

"""Python bindings for the hurzeta library."""

from ._hurzeta import (
    HurzetaError,
    bernoulli,
    bracket_kernel,
    genfun_closed,
    genfun_radius,
    genfun_series,
    harmonic_number,
    hp_partial_sum,
    hurwitz_zeta,
    odd_zeta_integral,
    polylog_nonpos,
    series_oracle,
    sinh_kernel,
    sinh_kernel_series,
    theorem1_scan,
    zero_integral_scan,
    zeta,
    zeta_from_genfun,
)

__all__ = [
    "HurzetaError",
    "bernoulli",
    "bracket_kernel",
    "genfun_closed",
    "genfun_radius",
    "genfun_series",
    "harmonic_number",
    "hp_partial_sum",
    "hurwitz_zeta",
    "odd_zeta_integral",
    "polylog_nonpos",
    "series_oracle",
    "sinh_kernel",
    "sinh_kernel_series",
    "theorem1_scan",
    "zero_integral_scan",
    "zeta",
    "zeta_from_genfun",
]

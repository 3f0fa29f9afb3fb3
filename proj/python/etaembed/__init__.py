"""Dirichlet eta toolkit: evaluation, weighted embedding, shift coefficients,
zero location and claim audits."""

from ._etaembed import (
    CoeffTable,
    b_kernel,
    b_ratio,
    bernoulli,
    bernoulli_rational,
    coeff_sums,
    coeff_table,
    convolution_residual,
    count_zeros_rect,
    eta,
    eta_derivative,
    eta_embedding,
    eta_info,
    eta_oracle,
    expansion_eval,
    functional_residual,
    inversion_eval,
    lambda_factor,
    refine_zero,
    refine_zero_bisect,
    run_default_audit,
    scan_critical_line,
    winding_rect,
)

__all__ = [
    "CoeffTable",
    "b_kernel",
    "b_ratio",
    "bernoulli",
    "bernoulli_rational",
    "coeff_sums",
    "coeff_table",
    "convolution_residual",
    "count_zeros_rect",
    "eta",
    "eta_derivative",
    "eta_embedding",
    "eta_info",
    "eta_oracle",
    "expansion_eval",
    "functional_residual",
    "inversion_eval",
    "lambda_factor",
    "refine_zero",
    "refine_zero_bisect",
    "run_default_audit",
    "scan_critical_line",
    "winding_rect",
]

__version__ = "1.0.0"

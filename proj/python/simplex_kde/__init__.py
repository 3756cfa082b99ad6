"""Dirichlet kernel density estimation on the simplex."""

from ._core import (
    KdeModel,
    SimplexKdeError,
    confidence_interval,
    gen_iid,
    gen_mixing_ar1,
    hdr_threshold,
    kappa,
    kappa_lq_norm_sq_asymptotic,
    kappa_sup_bound,
    log_dirichlet_density,
    lscv_mc,
    mse_expansion,
    psi,
    sample_uniform,
    select_bandwidth,
)

__version__ = "0.1.0"

__all__ = [
    "KdeModel",
    "SimplexKdeError",
    "confidence_interval",
    "gen_iid",
    "gen_mixing_ar1",
    "hdr_threshold",
    "kappa",
    "kappa_lq_norm_sq_asymptotic",
    "kappa_sup_bound",
    "log_dirichlet_density",
    "lscv_mc",
    "mse_expansion",
    "psi",
    "sample_uniform",
    "select_bandwidth",
]

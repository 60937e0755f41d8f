"""Intra-day vs overnight volatility asymmetry analytics."""

from dnvol._core import (
    AsymmetryReport,
    CorrMethod,
    CorrelationResult,
    CsvSpec,
    Date,
    PriceBar,
    PriceSeries,
    ReturnSeries,
    bootstrap_asymmetry,
    clean_series,
    compute_asymmetry,
    compute_returns,
    copula_pairs,
    coupled_vol_process,
    default_block_len,
    kendall_tau,
    lagged_xcorr,
    midranks,
    null_vol_process,
    parse_csv,
    pearson,
    reconstruct_prices,
    rng_algorithm,
    spearman,
    to_csv,
)

__all__ = [
    "AsymmetryReport",
    "CorrMethod",
    "CorrelationResult",
    "CsvSpec",
    "Date",
    "PriceBar",
    "PriceSeries",
    "ReturnSeries",
    "bootstrap_asymmetry",
    "clean_series",
    "compute_asymmetry",
    "compute_returns",
    "copula_pairs",
    "coupled_vol_process",
    "default_block_len",
    "kendall_tau",
    "lagged_xcorr",
    "midranks",
    "null_vol_process",
    "parse_csv",
    "pearson",
    "reconstruct_prices",
    "rng_algorithm",
    "spearman",
    "to_csv",
]

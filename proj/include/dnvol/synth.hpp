#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dnvol/returns.hpp"

namespace dnvol {

enum class SynthKind { copula_pair, coupled_vol, null_vol };

struct SynthSpec {
    SynthKind kind = SynthKind::null_vol;
    std::size_t n = 0;        // sample size / number of trading days
    double rho = 0.0;         // latent Gaussian correlation, copula_pair only
    double coupling = 0.0;    // feed-forward strength, coupled_vol only
    std::uint64_t seed = 0;
};

// n pairs from a bivariate Gaussian with correlation rho. Population
// Spearman is (6/pi) * asin(rho / 2).
std::pair<std::vector<double>, std::vector<double>> copula_pairs(const SynthSpec& spec);

double copula_population_spearman(double rho);

// Overnight-drives-day process: vol_d[k] depends monotonically on vol_n[k]
// (the preceding night) while the following night is independent of the day.
// Materialized through reconstructed prices so the whole ingest -> clean ->
// returns pipeline can round-trip it.
ReturnSeries coupled_vol_process(const SynthSpec& spec);

// i.i.d. heavy-tailed (Student-t, 4 dof) day and night returns, mutually
// independent. Population delta = 0; the null for bootstrap coverage.
ReturnSeries null_vol_process(const SynthSpec& spec);

// Rebuilds the price path behind a ReturnSeries (c_1 = 100, then alternate
// the intraday/overnight recursions) so generators can emit ingestible CSV.
PriceSeries reconstruct_prices(const ReturnSeries& rs);

// CSV in the same dialect ohlc_ingest reads (Date,Open,Close header).
std::string to_csv(const PriceSeries& series);

}  // namespace dnvol

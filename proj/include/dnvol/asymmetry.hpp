#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dnvol/rank_stats.hpp"
#include "dnvol/returns.hpp"

namespace dnvol {

// The core measurement: rank cross-correlation of intra-day volatility with
// the preceding night (c_nd) and with the following night (c_dn).
struct AsymmetryReport {
    std::string symbol;
    double c_nd = 0.0;
    double c_dn = 0.0;
    bool ratio_defined = false;  // false when |c_dn| <= 1e-10
    double ratio = 0.0;          // c_nd / c_dn when defined
    double delta = 0.0;          // c_nd - c_dn, the inference statistic
    std::size_t n_pairs = 0;     // N - 1 for both correlations
    CorrMethod method = CorrMethod::spearman;
    std::optional<std::pair<double, double>> ci_delta;  // 95% percentile bootstrap
    std::optional<double> p_value;                      // one-sided, delta <= 0
    std::optional<std::uint64_t> seed;
    std::string group;  // optional category label, carried through to reports
};

// Both correlations use exactly N-1 aligned pairs; ranks are computed over
// each pair subset independently. Requires N >= 31.
AsymmetryReport compute_asymmetry(const ReturnSeries& rs,
                                  CorrMethod method = CorrMethod::spearman);

struct LaggedCorrelation {
    int lag = 0;
    CorrelationResult night_leads_day;  // corr(vol_n[k], vol_d[k+lag])
    CorrelationResult day_leads_night;  // corr(vol_d[k], vol_n[k+1+lag])
};

// Lag 0 reproduces compute_asymmetry's c_nd and c_dn exactly.
std::vector<LaggedCorrelation> lagged_xcorr(const ReturnSeries& rs, int max_lag,
                                            CorrMethod method = CorrMethod::spearman);

// Circular block bootstrap over the aligned day axis, resampling
// (vol_n[k], vol_d[k], vol_n[k+1]) triples so both correlations see the same
// resamples. Deterministic given seed; each resample draws from
// (seed, resample index) so parallel evaluation order cannot change output.
AsymmetryReport bootstrap_asymmetry(const ReturnSeries& rs, std::size_t n_boot,
                                    std::size_t block_len, std::uint64_t seed,
                                    CorrMethod method = CorrMethod::spearman);

// ceil((N-1)^(1/3)), the default bootstrap block length.
std::size_t default_block_len(std::size_t n_days);

}  // namespace dnvol

#include "dnvol/asymmetry.hpp"

#include <algorithm>
#include <cmath>

#include "dnvol/errors.hpp"
#include "dnvol/rng.hpp"

namespace dnvol {

namespace {

constexpr double kRatioFloor = 1e-10;
constexpr std::size_t kMinPairs = 30;

// Aligned pair views over the day axis, 0-based:
//   c_nd pairs  (overnight[i], intraday[i+1])   night before day i+1, that day
//   c_dn pairs  (intraday[i],  overnight[i])    day i, the following night
struct AlignedPairs {
    std::vector<double> prev_night;  // |n_k| aligned with day k
    std::vector<double> day_nd;      // |d_k| for the c_nd pairing
    std::vector<double> day_dn;      // |d_k| for the c_dn pairing
    std::vector<double> next_night;  // |n_{k+1}| aligned with day k
};

AlignedPairs align(const ReturnSeries& rs) {
    auto vd = rs.vol_intraday();
    auto vn = rs.vol_overnight();
    std::size_t m = vn.size();  // N - 1
    AlignedPairs p;
    p.prev_night.reserve(m);
    p.day_nd.reserve(m);
    p.day_dn.reserve(m);
    p.next_night.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        p.prev_night.push_back(vn[i]);
        p.day_nd.push_back(vd[i + 1]);
        p.day_dn.push_back(vd[i]);
        p.next_night.push_back(vn[i]);
    }
    return p;
}

void fill_ratio(AsymmetryReport& r) {
    r.delta = r.c_nd - r.c_dn;
    r.ratio_defined = std::abs(r.c_dn) > kRatioFloor;
    r.ratio = r.ratio_defined ? r.c_nd / r.c_dn : 0.0;
}

double quantile(const std::vector<double>& sorted, double q) {
    double pos = q * static_cast<double>(sorted.size() - 1);
    std::size_t lo = static_cast<std::size_t>(pos);
    std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

}  // namespace

std::size_t default_block_len(std::size_t n_days) {
    std::size_t m = n_days - 1;
    auto len = static_cast<std::size_t>(std::ceil(std::cbrt(static_cast<double>(m))));
    // cbrt can land just above an exact integer root; back off if so
    while (len > 1 && (len - 1) * (len - 1) * (len - 1) >= m) --len;
    return len;
}

AsymmetryReport compute_asymmetry(const ReturnSeries& rs, CorrMethod method) {
    if (rs.days() < kMinPairs + 1)
        throw TooShortError("asymmetry needs >= " + std::to_string(kMinPairs + 1) +
                            " days, got " + std::to_string(rs.days()));
    AlignedPairs p = align(rs);
    AsymmetryReport r;
    r.symbol = rs.symbol;
    r.method = method;
    r.c_nd = correlate(method, p.prev_night, p.day_nd).estimate;
    r.c_dn = correlate(method, p.day_dn, p.next_night).estimate;
    r.n_pairs = p.prev_night.size();
    fill_ratio(r);
    return r;
}

std::vector<LaggedCorrelation> lagged_xcorr(const ReturnSeries& rs, int max_lag,
                                            CorrMethod method) {
    if (max_lag < 0) throw ConfigError("max_lag must be >= 0");
    std::size_t n = rs.days();
    if (n < 1 || n - 1 < kMinPairs + static_cast<std::size_t>(max_lag))
        throw TooShortError("not enough pairs for max_lag " + std::to_string(max_lag));

    auto vd = rs.vol_intraday();
    auto vn = rs.vol_overnight();
    std::size_t m = vn.size();

    std::vector<LaggedCorrelation> out;
    out.reserve(max_lag + 1);
    for (int lag = 0; lag <= max_lag; ++lag) {
        std::size_t len = m - static_cast<std::size_t>(lag);
        std::vector<double> a(len), b(len), c(len), d(len);
        for (std::size_t i = 0; i < len; ++i) {
            a[i] = vn[i];            // night before day i+1
            b[i] = vd[i + 1 + lag];  // day lag days later
            c[i] = vd[i];            // day i
            d[i] = vn[i + lag];      // night following day i+lag
        }
        out.push_back({lag, correlate(method, a, b), correlate(method, c, d)});
    }
    return out;
}

AsymmetryReport bootstrap_asymmetry(const ReturnSeries& rs, std::size_t n_boot,
                                    std::size_t block_len, std::uint64_t seed,
                                    CorrMethod method) {
    if (n_boot < 200) throw ConfigError("n_boot must be >= 200");
    std::size_t n = rs.days();
    if (block_len < 1 || block_len > (n - 1) / 2)
        throw ConfigError("block_len out of range [1, (N-1)/2]");

    AsymmetryReport r = compute_asymmetry(rs, method);

    auto vd = rs.vol_intraday();
    auto vn = rs.vol_overnight();
    // Triples (vol_n[k], vol_d[k], vol_n[k+1]) share the day axis so both
    // correlations are recomputed on identical resamples.
    std::size_t m = vn.size() - 1;

    std::vector<double> deltas(n_boot);
    for (std::size_t b = 0; b < n_boot; ++b) {
        // Resample randomness comes from (seed, resample index) only, so
        // evaluation order cannot change the output.
        Rng rng(seed, b + 1);
        std::vector<double> prev_night, day, next_night;
        prev_night.reserve(m);
        day.reserve(m);
        next_night.reserve(m);
        while (prev_night.size() < m) {
            std::size_t start = rng.uniform_below(m);
            for (std::size_t j = 0; j < block_len && prev_night.size() < m; ++j) {
                std::size_t i = (start + j) % m;  // circular
                prev_night.push_back(vn[i]);
                day.push_back(vd[i + 1]);
                next_night.push_back(vn[i + 1]);
            }
        }
        double c_nd = correlate(method, prev_night, day).estimate;
        double c_dn = correlate(method, day, next_night).estimate;
        deltas[b] = c_nd - c_dn;
    }

    std::sort(deltas.begin(), deltas.end());
    r.ci_delta = {quantile(deltas, 0.025), quantile(deltas, 0.975)};
    std::size_t nonpositive =
        std::count_if(deltas.begin(), deltas.end(), [](double d) { return d <= 0.0; });
    r.p_value = static_cast<double>(nonpositive) / static_cast<double>(n_boot);
    r.seed = seed;
    return r;
}

}  // namespace dnvol

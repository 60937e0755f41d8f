// Independent brute-force oracles. These stay deliberately naive (quadratic
// counting, direct definitions) and must not share code with the production
// implementations they check.
#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace oracles {

// Midrank by direct definition: (#smaller) + (#equal + 1) / 2.
inline std::vector<double> midranks(const std::vector<double>& x) {
    std::vector<double> r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        std::size_t less = 0, equal = 0;
        for (double v : x) {
            if (v < x[i]) ++less;
            if (v == x[i]) ++equal;
        }
        r[i] = static_cast<double>(less) + (static_cast<double>(equal) + 1.0) / 2.0;
    }
    return r;
}

inline double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    std::size_t n = x.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0.0 || syy == 0.0) throw std::runtime_error("oracle: constant input");
    return sxy / std::sqrt(sxx * syy);
}

inline double spearman(const std::vector<double>& x, const std::vector<double>& y) {
    return pearson(midranks(x), midranks(y));
}

// Tau-b by O(n^2) pair counting.
inline double kendall_tau(const std::vector<double>& x, const std::vector<double>& y) {
    std::size_t n = x.size();
    long long concordant = 0, discordant = 0, ties_x = 0, ties_y = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double dx = x[i] - x[j];
            double dy = y[i] - y[j];
            if (dx == 0.0 && dy == 0.0) continue;
            if (dx == 0.0) {
                ++ties_x;
            } else if (dy == 0.0) {
                ++ties_y;
            } else if ((dx > 0.0) == (dy > 0.0)) {
                ++concordant;
            } else {
                ++discordant;
            }
        }
    }
    double denom_x = static_cast<double>(concordant + discordant + ties_x);
    double denom_y = static_cast<double>(concordant + discordant + ties_y);
    if (denom_x == 0.0 || denom_y == 0.0) throw std::runtime_error("oracle: all tied");
    return static_cast<double>(concordant - discordant) / std::sqrt(denom_x * denom_y);
}

}  // namespace oracles

#include "dnvol/rank_stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dnvol/errors.hpp"

namespace dnvol {

std::string to_string(CorrMethod m) {
    switch (m) {
        case CorrMethod::spearman: return "spearman";
        case CorrMethod::kendall: return "kendall";
        case CorrMethod::pearson: return "pearson";
    }
    return "?";
}

CorrMethod corr_method_from_string(const std::string& s) {
    if (s == "spearman") return CorrMethod::spearman;
    if (s == "kendall") return CorrMethod::kendall;
    if (s == "pearson") return CorrMethod::pearson;
    throw ConfigError("unknown correlation method '" + s + "'");
}

namespace {

void require_finite(std::span<const double> x, const char* what) {
    for (double v : x)
        if (!std::isfinite(v)) throw DomainError(std::string("non-finite value in ") + what);
}

void require_pair(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw ConfigError("correlation inputs differ in length");
    if (x.size() < 3) throw TooShortError("correlation needs n >= 3");
    require_finite(x, "x");
    require_finite(y, "y");
}

// Pearson on raw values; shared by pearson() and spearman().
double pearson_estimate(std::span<const double> x, std::span<const double> y) {
    std::size_t n = x.size();
    double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double dx = x[i] - mx;
        double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0)
        throw DegenerateSampleError("constant sample has zero variance");
    double r = sxy / std::sqrt(sxx * syy);
    return std::clamp(r, -1.0, 1.0);
}

// Merge sort on y counting strict inversions (discordant swaps).
std::uint64_t merge_count(std::vector<double>& y, std::vector<double>& tmp,
                          std::size_t lo, std::size_t hi) {
    if (hi - lo < 2) return 0;
    std::size_t mid = lo + (hi - lo) / 2;
    std::uint64_t swaps = merge_count(y, tmp, lo, mid) + merge_count(y, tmp, mid, hi);
    std::size_t i = lo, j = mid, k = lo;
    while (i < mid && j < hi) {
        if (y[j] < y[i]) {
            swaps += mid - i;
            tmp[k++] = y[j++];
        } else {
            tmp[k++] = y[i++];
        }
    }
    while (i < mid) tmp[k++] = y[i++];
    while (j < hi) tmp[k++] = y[j++];
    std::copy(tmp.begin() + lo, tmp.begin() + hi, y.begin() + lo);
    return swaps;
}

std::uint64_t tied_pairs(const std::vector<double>& sorted) {
    std::uint64_t t = 0;
    std::size_t i = 0;
    while (i < sorted.size()) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        std::uint64_t run = j - i;
        t += run * (run - 1) / 2;
        i = j;
    }
    return t;
}

}  // namespace

RankVector midranks(std::span<const double> x) {
    if (x.empty()) throw TooShortError("midranks of empty sample");
    require_finite(x, "midranks input");

    std::size_t n = x.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });

    RankVector rv;
    rv.n = n;
    rv.ranks.assign(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j < n && x[order[j]] == x[order[i]]) ++j;
        // Tied run spans integer ranks i+1 .. j; midrank is their average,
        // a half-integer, exact in double.
        double rank = static_cast<double>(i + j + 1) / 2.0;
        for (std::size_t k = i; k < j; ++k) rv.ranks[order[k]] = rank;
        i = j;
    }
    return rv;
}

CorrelationResult spearman(std::span<const double> x, std::span<const double> y) {
    require_pair(x, y);
    // Pearson on midranks, not the 1 - 6*sum(d^2)/... shortcut: the shortcut
    // is wrong under ties and zero-volatility days genuinely tie.
    RankVector rx = midranks(x);
    RankVector ry = midranks(y);
    return {pearson_estimate(rx.ranks, ry.ranks), x.size(), CorrMethod::spearman};
}

CorrelationResult pearson(std::span<const double> x, std::span<const double> y) {
    require_pair(x, y);
    return {pearson_estimate(x, y), x.size(), CorrMethod::pearson};
}

CorrelationResult kendall_tau(std::span<const double> x, std::span<const double> y) {
    require_pair(x, y);
    std::size_t n = x.size();

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (x[a] != x[b]) return x[a] < x[b];
        return y[a] < y[b];
    });

    // Ties in x, and in (x, y) jointly, from the x-sorted view.
    std::uint64_t n1 = 0, n3 = 0;
    {
        std::size_t i = 0;
        while (i < n) {
            std::size_t j = i;
            while (j < n && x[order[j]] == x[order[i]]) ++j;
            std::uint64_t run = j - i;
            n1 += run * (run - 1) / 2;
            std::size_t a = i;
            while (a < j) {
                std::size_t b = a;
                while (b < j && y[order[b]] == y[order[a]]) ++b;
                std::uint64_t jr = b - a;
                n3 += jr * (jr - 1) / 2;
                a = b;
            }
            i = j;
        }
    }

    std::vector<double> ysorted(n);
    for (std::size_t i = 0; i < n; ++i) ysorted[i] = y[order[i]];
    std::vector<double> tmp(n);
    std::uint64_t swaps = merge_count(ysorted, tmp, 0, n);
    std::uint64_t n2 = tied_pairs(ysorted);  // ysorted is now fully sorted by y

    std::uint64_t n0 = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    if (n0 == n1 || n0 == n2)
        throw DegenerateSampleError("all-tied sample in kendall_tau");

    // Knight's identity: C - D = n0 - n1 - n2 + n3 - 2*swaps.
    double num = static_cast<double>(n0) - static_cast<double>(n1) -
                 static_cast<double>(n2) + static_cast<double>(n3) -
                 2.0 * static_cast<double>(swaps);
    double den = std::sqrt(static_cast<double>(n0 - n1)) *
                 std::sqrt(static_cast<double>(n0 - n2));
    return {std::clamp(num / den, -1.0, 1.0), n, CorrMethod::kendall};
}

CorrelationResult correlate(CorrMethod method, std::span<const double> x,
                            std::span<const double> y) {
    switch (method) {
        case CorrMethod::spearman: return spearman(x, y);
        case CorrMethod::kendall: return kendall_tau(x, y);
        case CorrMethod::pearson: return pearson(x, y);
    }
    throw ConfigError("unknown correlation method");
}

}  // namespace dnvol

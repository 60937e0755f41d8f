#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace dnvol {

struct RankVector {
    std::vector<double> ranks;  // midranks, ties averaged; each in [1, n]
    std::size_t n = 0;
};

enum class CorrMethod { spearman, kendall, pearson };

std::string to_string(CorrMethod m);
CorrMethod corr_method_from_string(const std::string& s);

struct CorrelationResult {
    double estimate = 0.0;  // in [-1, 1]
    std::size_t n_pairs = 0;
    CorrMethod method = CorrMethod::spearman;
};

// Tie-aware ranks: equal values get the average of the integer ranks they
// span. Throws DomainError on non-finite input.
RankVector midranks(std::span<const double> x);

// Pearson correlation of midranks. Exact +/-1 on tie-free monotone pairs.
// Throws DegenerateSampleError on constant input rather than returning 0.
CorrelationResult spearman(std::span<const double> x, std::span<const double> y);

// Tie-corrected tau-b, O(n log n) via merge-sort inversion counting.
CorrelationResult kendall_tau(std::span<const double> x, std::span<const double> y);

// Product-moment correlation, kept for the robustness comparison.
CorrelationResult pearson(std::span<const double> x, std::span<const double> y);

CorrelationResult correlate(CorrMethod method, std::span<const double> x,
                            std::span<const double> y);

}  // namespace dnvol

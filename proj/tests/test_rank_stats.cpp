#include <cmath>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"

#include "dnvol/errors.hpp"
#include "dnvol/rank_stats.hpp"
#include "dnvol/rng.hpp"

using namespace dnvol;

namespace {

// Random vector with injected ties: values drawn from a small discrete grid
// with probability tie_frac, else continuous.
std::vector<double> random_vector(Rng& rng, std::size_t n, double tie_frac) {
    std::vector<double> v(n);
    for (auto& x : v) {
        if (rng.uniform01() < tie_frac)
            x = static_cast<double>(rng.uniform_below(5));
        else
            x = rng.normal();
    }
    return v;
}

bool is_constant(const std::vector<double>& v) {
    for (double x : v)
        if (x != v.front()) return false;
    return true;
}

}  // namespace

TEST_CASE("midranks: strictly increasing") {
    auto rv = midranks(std::vector<double>{10, 20, 30});
    CHECK(rv.ranks == std::vector<double>{1, 2, 3});
}

TEST_CASE("midranks: ties averaged") {
    auto rv = midranks(std::vector<double>{5, 5, 7});
    CHECK(rv.ranks == std::vector<double>{1.5, 1.5, 3});
}

TEST_CASE("midranks: mixed example against brute-force oracle") {
    std::vector<double> x{3, 1, 4, 1, 5};
    auto rv = midranks(x);
    CHECK(rv.ranks == std::vector<double>{3, 1.5, 4, 1.5, 5});
    CHECK(rv.ranks == oracles::midranks(x));
}

TEST_CASE("midranks invariants: sum n(n+1)/2, every rank in [1, n]") {
    Rng rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 1 + rng.uniform_below(300);
        auto x = random_vector(rng, n, 0.4);
        auto rv = midranks(x);
        CHECK(rv.ranks == oracles::midranks(x));
        double sum = 0.0;
        for (double r : rv.ranks) {
            sum += r;
            CHECK(r >= 1.0);
            CHECK(r <= static_cast<double>(n));
        }
        CHECK(sum == static_cast<double>(n) * (n + 1) / 2.0);
    }
}

TEST_CASE("midranks rejects non-finite input") {
    CHECK_THROWS_AS(midranks(std::vector<double>{1.0, std::nan(""), 2.0}), DomainError);
}

TEST_CASE("spearman: comonotone and antimonotone are exactly +/-1") {
    CHECK(spearman(std::vector<double>{1, 2, 3, 4}, std::vector<double>{10, 20, 30, 40})
              .estimate == 1.0);
    CHECK(spearman(std::vector<double>{1, 2, 3, 4}, std::vector<double>{8, 6, 4, 2}).estimate ==
          -1.0);
}

TEST_CASE("spearman: hand-evaluated example") {
    // ranks [1,2,3] vs [2,1,3]
    auto r = spearman(std::vector<double>{1, 2, 3}, std::vector<double>{2, 1, 3});
    CHECK(r.estimate == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(r.n_pairs == 3);
    CHECK(r.method == CorrMethod::spearman);
}

TEST_CASE("pearson examples") {
    std::vector<double> x{1, 2, 3, 7};
    std::vector<double> y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = 2 * x[i] + 1;
    CHECK(pearson(x, y).estimate == doctest::Approx(1.0).epsilon(1e-14));
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = -x[i];
    CHECK(pearson(x, y).estimate == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(pearson(std::vector<double>{1, 2, 3}, std::vector<double>{2, 1, 3}).estimate ==
          doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("kendall: hand-counted examples") {
    CHECK(kendall_tau(std::vector<double>{1, 2, 3, 4}, std::vector<double>{2, 4, 6, 9})
              .estimate == 1.0);
    // 2 concordant, 1 discordant out of 3 pairs
    CHECK(kendall_tau(std::vector<double>{1, 2, 3}, std::vector<double>{2, 1, 3}).estimate ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    std::vector<double> xt{1, 1, 2, 3};
    std::vector<double> yt{1, 2, 3, 4};
    CHECK(kendall_tau(xt, yt).estimate ==
          doctest::Approx(oracles::kendall_tau(xt, yt)).epsilon(1e-14));
}

TEST_CASE("degenerate samples raise, never a silent zero") {
    std::vector<double> constant{2, 2, 2, 2};
    std::vector<double> varying{1, 2, 3, 4};
    CHECK_THROWS_AS(spearman(constant, varying), DegenerateSampleError);
    CHECK_THROWS_AS(spearman(varying, constant), DegenerateSampleError);
    CHECK_THROWS_AS(kendall_tau(constant, varying), DegenerateSampleError);
    CHECK_THROWS_AS(pearson(varying, constant), DegenerateSampleError);
}

TEST_CASE("spearman equals pearson on midranks, kendall equals quadratic oracle") {
    Rng rng(17);
    int done = 0;
    while (done < 300) {
        std::size_t n = 3 + rng.uniform_below(198);
        auto x = random_vector(rng, n, 0.3);
        auto y = random_vector(rng, n, 0.3);
        if (is_constant(x) || is_constant(y)) continue;
        ++done;
        CHECK(std::abs(spearman(x, y).estimate - oracles::spearman(x, y)) < 1e-12);
        CHECK(std::abs(kendall_tau(x, y).estimate - oracles::kendall_tau(x, y)) < 1e-14);
    }
}

TEST_CASE("symmetry in the two arguments") {
    Rng rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        auto x = random_vector(rng, 60, 0.3);
        auto y = random_vector(rng, 60, 0.3);
        if (is_constant(x) || is_constant(y)) continue;
        CHECK(spearman(x, y).estimate == spearman(y, x).estimate);
        CHECK(kendall_tau(x, y).estimate == kendall_tau(y, x).estimate);
        CHECK(pearson(x, y).estimate == doctest::Approx(pearson(y, x).estimate).epsilon(1e-14));
    }
}

TEST_CASE("monotone invariance: strictly increasing transforms leave rank stats exact") {
    Rng rng(29);
    for (int trial = 0; trial < 30; ++trial) {
        auto x = random_vector(rng, 80, 0.3);
        auto y = random_vector(rng, 80, 0.3);
        if (is_constant(x) || is_constant(y)) continue;
        std::vector<double> gx(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) gx[i] = x[i] * x[i] * x[i];  // strictly increasing
        CHECK(spearman(gx, y).estimate == spearman(x, y).estimate);
        CHECK(kendall_tau(gx, y).estimate == kendall_tau(x, y).estimate);
    }
}

TEST_CASE("bounded influence: one corrupted observation moves spearman by <= 10/n") {
    Rng rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 100 + rng.uniform_below(200);
        auto x = random_vector(rng, n, 0.1);
        auto y = random_vector(rng, n, 0.1);
        if (is_constant(x) || is_constant(y)) continue;
        double base = spearman(x, y).estimate;
        auto corrupted = x;
        corrupted[rng.uniform_below(n)] = (rng.uniform01() - 0.5) * 1e12;
        double moved = spearman(corrupted, y).estimate;
        CHECK(std::abs(moved - base) <= 10.0 / static_cast<double>(n));
        // the oracle agrees on the corrupted sample too
        CHECK(std::abs(moved - oracles::spearman(corrupted, y)) < 1e-12);
    }
}

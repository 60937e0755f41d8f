#include <cmath>

#include "doctest.h"

#include "dnvol/cleaning.hpp"
#include "dnvol/errors.hpp"

using namespace dnvol;

namespace {

PriceSeries good_series(std::size_t n) {
    PriceSeries s;
    Date d{2020, 1, 2};
    double p = 100.0;
    for (std::size_t i = 0; i < n; ++i) {
        s.bars.push_back({d, p, p * 1.001, {}, {}, {}});
        p *= 1.002;
        d = d.next_weekday();
    }
    return s;
}

}  // namespace

TEST_CASE("non-positive price removed under default policy") {
    auto s = good_series(100);
    s.bars[50].open = 0.0;
    auto [cleaned, log] = clean_series(s, {});
    CHECK(cleaned.bars.size() == 99);
    REQUIRE(log.removals.size() == 1);
    CHECK(log.removals[0].reason == "nonpositive price");
    CHECK(log.counts.at("nonpositive price") == 1);
}

TEST_CASE("a -30% overnight crash is retained by the default policy") {
    auto s = good_series(100);
    s.bars[60].open = s.bars[59].close * 0.70;
    s.bars[60].close = s.bars[60].open * 1.001;
    auto [cleaned, log] = clean_series(s, {});
    CHECK(cleaned.bars.size() == 100);
    CHECK(log.removals.empty());
}

TEST_CASE("max_abs_logreturn removes the crash when set") {
    auto s = good_series(100);
    s.bars[60].open = s.bars[59].close * 0.70;
    s.bars[60].close = s.bars[60].open * 1.001;
    CleanPolicy policy;
    policy.max_abs_logreturn = 0.20;
    auto [cleaned, log] = clean_series(s, policy);
    CHECK(cleaned.bars.size() == 99);
    CHECK(log.counts.at("abs logreturn above threshold") == 1);
}

TEST_CASE("too few survivors is a too-short error naming the count") {
    auto s = good_series(10);
    CHECK_THROWS_WITH_AS(clean_series(s, {}),
                         "series too short after cleaning: 10 bars, need >= 30",
                         TooShortError);
}

TEST_CASE("removals + surviving bars = input bars") {
    auto s = good_series(50);
    s.bars[3].close = -1.0;
    s.bars[7].open = 0.0;
    auto [cleaned, log] = clean_series(s, {});
    CHECK(cleaned.bars.size() + log.removals.size() == 50);
}

TEST_CASE("cleaning is idempotent under a fixed policy") {
    auto s = good_series(60);
    s.bars[10].open = 0.0;
    CleanPolicy policy;
    policy.max_abs_logreturn = 0.5;
    auto once = clean_series(s, policy);
    auto twice = clean_series(once.series, policy);
    CHECK(twice.log.removals.empty());
    CHECK(twice.series.bars.size() == once.series.bars.size());
}

TEST_CASE("all switches disabled: identity on bars") {
    auto s = good_series(40);
    s.bars[5].open = -3.0;  // stays, switch is off
    CleanPolicy policy;
    policy.drop_nonpositive_prices = false;
    policy.min_length = 0;
    auto [cleaned, log] = clean_series(s, policy);
    CHECK(cleaned.bars.size() == 40);
    CHECK(log.removals.empty());
}

TEST_CASE("non-positive threshold is a configuration error") {
    CleanPolicy policy;
    policy.max_abs_logreturn = -0.1;
    CHECK_THROWS_AS(clean_series(good_series(40), policy), ConfigError);
}

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dnvol/ohlc.hpp"

namespace dnvol {

struct CleanPolicy {
    bool drop_nonpositive_prices = true;
    // Natural-log units. Absent = keep all outliers (crashes and split jumps stay in).
    std::optional<double> max_abs_logreturn;
    std::size_t min_length = 30;
};

struct CleanRecord {
    Date date;
    std::string field;   // "open", "close", "bar"
    std::string reason;
};

struct CleanLog {
    std::vector<CleanRecord> removals;
    std::map<std::string, std::size_t> counts;  // per reason

    void add(const Date& date, const std::string& field, const std::string& reason) {
        removals.push_back({date, field, reason});
        ++counts[reason];
    }
};

struct CleanResult {
    PriceSeries series;
    CleanLog log;
};

// Removes structurally impossible bars per policy, logging every removal.
// Idempotent under a fixed policy. Throws TooShortError when fewer than
// policy.min_length bars survive.
CleanResult clean_series(const PriceSeries& series, const CleanPolicy& policy);

}  // namespace dnvol

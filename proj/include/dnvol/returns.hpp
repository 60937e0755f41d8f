#pragma once

#include <string>
#include <vector>

#include "dnvol/date.hpp"
#include "dnvol/ohlc.hpp"

namespace dnvol {

// Intra-day and overnight log-return decomposition of one price series.
//
// With N trading days, intraday[i] = ln(close_i / open_i) for i = 0..N-1 and
// overnight[i] = ln(open_{i+1} / close_i) for i = 0..N-2, i.e. overnight[i]
// is the gap *before* day i+1. Weekend and holiday gaps are a single
// overnight return.
struct ReturnSeries {
    std::string symbol;
    std::vector<Date> dates;       // N
    std::vector<double> intraday;  // N
    std::vector<double> overnight; // N - 1

    std::size_t days() const { return dates.size(); }

    std::vector<double> vol_intraday() const;
    std::vector<double> vol_overnight() const;
};

// Throws DomainError on a non-positive price, TooShortError below 2 bars.
ReturnSeries compute_returns(const PriceSeries& series);

}  // namespace dnvol

#include "dnvol/cleaning.hpp"

#include <cmath>

#include "dnvol/errors.hpp"

namespace dnvol {

CleanResult clean_series(const PriceSeries& series, const CleanPolicy& policy) {
    if (policy.max_abs_logreturn && *policy.max_abs_logreturn <= 0.0)
        throw ConfigError("max_abs_logreturn must be positive");

    CleanResult result;
    result.series.symbol = series.symbol;
    result.series.source = series.source;

    for (const PriceBar& bar : series.bars) {
        if (policy.drop_nonpositive_prices && (bar.open <= 0.0 || bar.close <= 0.0)) {
            result.log.add(bar.date, bar.open <= 0.0 ? "open" : "close", "nonpositive price");
            continue;
        }
        if (policy.max_abs_logreturn) {
            double cap = *policy.max_abs_logreturn;
            double intraday = std::log(bar.close / bar.open);
            if (std::abs(intraday) > cap) {
                result.log.add(bar.date, "bar", "abs logreturn above threshold");
                continue;
            }
            if (!result.series.bars.empty()) {
                double overnight = std::log(bar.open / result.series.bars.back().close);
                if (std::abs(overnight) > cap) {
                    result.log.add(bar.date, "bar", "abs logreturn above threshold");
                    continue;
                }
            }
        }
        result.series.bars.push_back(bar);
    }

    if (result.series.bars.size() < policy.min_length)
        throw TooShortError("series too short after cleaning: " +
                            std::to_string(result.series.bars.size()) + " bars, need >= " +
                            std::to_string(policy.min_length));
    return result;
}

}  // namespace dnvol

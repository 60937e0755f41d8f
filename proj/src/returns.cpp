#include "dnvol/returns.hpp"

#include <cmath>

#include "dnvol/errors.hpp"

namespace dnvol {

std::vector<double> ReturnSeries::vol_intraday() const {
    std::vector<double> v(intraday.size());
    for (std::size_t i = 0; i < intraday.size(); ++i) v[i] = std::abs(intraday[i]);
    return v;
}

std::vector<double> ReturnSeries::vol_overnight() const {
    std::vector<double> v(overnight.size());
    for (std::size_t i = 0; i < overnight.size(); ++i) v[i] = std::abs(overnight[i]);
    return v;
}

ReturnSeries compute_returns(const PriceSeries& series) {
    if (series.bars.size() < 2)
        throw TooShortError("return decomposition needs >= 2 bars, got " +
                            std::to_string(series.bars.size()));

    ReturnSeries rs;
    rs.symbol = series.symbol;
    rs.dates.reserve(series.bars.size());
    rs.intraday.reserve(series.bars.size());
    rs.overnight.reserve(series.bars.size() - 1);

    for (std::size_t i = 0; i < series.bars.size(); ++i) {
        const PriceBar& bar = series.bars[i];
        if (bar.open <= 0.0 || bar.close <= 0.0)
            throw DomainError("non-positive price at " + bar.date.iso() +
                              "; cleaning should have removed it");
        rs.dates.push_back(bar.date);
        rs.intraday.push_back(std::log(bar.close / bar.open));
        if (i > 0) rs.overnight.push_back(std::log(bar.open / series.bars[i - 1].close));
    }
    return rs;
}

}  // namespace dnvol

#include "dnvol/synth.hpp"

#include <charconv>
#include <cmath>

#include "dnvol/errors.hpp"
#include "dnvol/rng.hpp"

namespace dnvol {

namespace {

// Keeps synthetic daily moves at a realistic ~1% scale so reconstructed
// price paths stay well inside double range. Monotone, so rank statistics
// are unaffected.
constexpr double kReturnScale = 0.01;

void require_kind(const SynthSpec& spec, SynthKind kind, const char* name) {
    if (spec.kind != kind) throw ConfigError(std::string("spec.kind is not ") + name);
    if (spec.n < 2) throw ConfigError("spec.n must be >= 2");
}

std::vector<Date> trading_dates(std::size_t n) {
    std::vector<Date> dates;
    dates.reserve(n);
    Date d{2000, 1, 3};  // a Monday
    for (std::size_t i = 0; i < n; ++i) {
        dates.push_back(d);
        d = d.next_weekday();
    }
    return dates;
}

std::string shortest_repr(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

}  // namespace

double copula_population_spearman(double rho) {
    return (6.0 / M_PI) * std::asin(rho / 2.0);
}

std::pair<std::vector<double>, std::vector<double>> copula_pairs(const SynthSpec& spec) {
    require_kind(spec, SynthKind::copula_pair, "copula_pair");
    if (std::abs(spec.rho) >= 1.0) throw ConfigError("|rho| must be < 1");

    Rng rng(spec.seed);
    std::vector<double> x(spec.n), y(spec.n);
    double mix = std::sqrt(1.0 - spec.rho * spec.rho);
    for (std::size_t i = 0; i < spec.n; ++i) {
        double z1 = rng.normal();
        double z2 = rng.normal();
        x[i] = z1;
        y[i] = spec.rho * z1 + mix * z2;
    }
    return {std::move(x), std::move(y)};
}

ReturnSeries coupled_vol_process(const SynthSpec& spec) {
    require_kind(spec, SynthKind::coupled_vol, "coupled_vol");
    if (spec.coupling < 0.0) throw ConfigError("coupling must be >= 0");

    Rng rng(spec.seed);
    ReturnSeries rs;
    rs.symbol = "coupled_vol";
    rs.dates = trading_dates(spec.n);
    rs.intraday.resize(spec.n);
    rs.overnight.resize(spec.n - 1);

    // Day 0 has no preceding night in the series; give it an independent draw.
    rs.intraday[0] = kReturnScale * std::exp(rng.normal()) * rng.sign();
    for (std::size_t i = 0; i + 1 < spec.n; ++i) {
        double z = rng.normal();  // shared latent: this night and the next day
        double w = rng.normal();
        rs.overnight[i] = kReturnScale * std::exp(z) * rng.sign();
        rs.intraday[i + 1] = kReturnScale * std::exp(spec.coupling * z + w) * rng.sign();
    }
    return rs;
}

ReturnSeries null_vol_process(const SynthSpec& spec) {
    require_kind(spec, SynthKind::null_vol, "null_vol");

    Rng rng(spec.seed);
    ReturnSeries rs;
    rs.symbol = "null_vol";
    rs.dates = trading_dates(spec.n);
    rs.intraday.resize(spec.n);
    rs.overnight.resize(spec.n - 1);
    for (std::size_t i = 0; i < spec.n; ++i) rs.intraday[i] = kReturnScale * rng.student_t4();
    for (std::size_t i = 0; i + 1 < spec.n; ++i)
        rs.overnight[i] = kReturnScale * rng.student_t4();
    return rs;
}

PriceSeries reconstruct_prices(const ReturnSeries& rs) {
    if (rs.days() < 2) throw TooShortError("need >= 2 days to reconstruct prices");
    PriceSeries ps;
    ps.symbol = rs.symbol;
    ps.source = "synthetic";
    ps.bars.resize(rs.days());

    double close = 100.0;
    ps.bars[0] = {rs.dates[0], close * std::exp(-rs.intraday[0]), close, {}, {}, {}};
    for (std::size_t i = 1; i < rs.days(); ++i) {
        double open = close * std::exp(rs.overnight[i - 1]);
        close = open * std::exp(rs.intraday[i]);
        ps.bars[i] = {rs.dates[i], open, close, {}, {}, {}};
    }
    return ps;
}

std::string to_csv(const PriceSeries& series) {
    std::string out = "Date,Open,Close\n";
    for (const PriceBar& bar : series.bars) {
        out += bar.date.iso();
        out += ',';
        out += shortest_repr(bar.open);
        out += ',';
        out += shortest_repr(bar.close);
        out += '\n';
    }
    return out;
}

}  // namespace dnvol

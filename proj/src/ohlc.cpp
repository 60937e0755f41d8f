#include "dnvol/ohlc.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "dnvol/errors.hpp"

namespace dnvol {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& line, char delim) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, delim)) out.push_back(trim(field));
    if (!line.empty() && line.back() == delim) out.push_back("");
    return out;
}

char detect_delimiter(const std::string& header) {
    return header.find(';') != std::string::npos ? ';' : ',';
}

// Column index for a header name; -1 when absent.
int find_column(const std::vector<std::string>& header, const std::string& name) {
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return static_cast<int>(i);
    return -1;
}

}  // namespace

std::optional<Date> parse_date(const std::string& field, DateFormat format) {
    int a = 0, b = 0, c = 0;
    char sep1 = 0, sep2 = 0, extra = 0;
    std::istringstream ss(field);
    if (!(ss >> a >> sep1 >> b >> sep2 >> c) || (ss >> extra)) return std::nullopt;
    Date d;
    if (format == DateFormat::iso8601) {
        if (sep1 != '-' || sep2 != '-') return std::nullopt;
        d = {a, b, c};
    } else {
        if (sep1 != '.' || sep2 != '.') return std::nullopt;
        d = {c, b, a};
    }
    if (!d.valid()) return std::nullopt;
    return d;
}

std::optional<double> parse_number(const std::string& field, bool decimal_comma) {
    if (field.empty()) return std::nullopt;
    std::string s = field;
    if (decimal_comma) std::replace(s.begin(), s.end(), ',', '.');
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return value;
}

ParseResult parse_csv(std::istream& text, const CsvSpec& spec, const std::string& symbol) {
    std::string header_line;
    if (!std::getline(text, header_line)) throw InputError("empty-input: no header row");
    header_line = trim(header_line);

    char delim = spec.delimiter ? spec.delimiter : detect_delimiter(header_line);
    if (spec.decimal_comma && delim == ',')
        throw ConfigError("decimal-comma requires a non-comma delimiter");

    auto header = split(header_line, delim);
    int col_date = find_column(header, spec.date_col);
    int col_open = find_column(header, spec.open_col);
    int col_close = find_column(header, spec.close_col);
    if (col_date < 0) throw ConfigError("header missing mapped column '" + spec.date_col + "'");
    if (col_open < 0) throw ConfigError("header missing mapped column '" + spec.open_col + "'");
    if (col_close < 0) throw ConfigError("header missing mapped column '" + spec.close_col + "'");
    int col_high = spec.high_col.empty() ? -1 : find_column(header, spec.high_col);
    int col_low = spec.low_col.empty() ? -1 : find_column(header, spec.low_col);
    int col_vol = spec.volume_col.empty() ? -1 : find_column(header, spec.volume_col);

    ParseResult result;
    result.series.symbol = symbol;
    std::string line;
    std::size_t row = 0;
    while (std::getline(text, line)) {
        line = trim(line);
        if (line.empty()) continue;
        ++row;
        auto fields = split(line, delim);
        auto reject = [&](const std::string& reason) {
            result.rejected.push_back({row, reason});
        };
        int needed = std::max({col_date, col_open, col_close});
        if (static_cast<int>(fields.size()) <= needed) {
            reject("too few fields");
            continue;
        }
        auto date = parse_date(fields[col_date], spec.date_format);
        if (!date) {
            reject("unparseable date '" + fields[col_date] + "'");
            continue;
        }
        auto open = parse_number(fields[col_open], spec.decimal_comma);
        if (!open) {
            reject("non-numeric open '" + fields[col_open] + "'");
            continue;
        }
        auto close = parse_number(fields[col_close], spec.decimal_comma);
        if (!close) {
            reject("non-numeric close '" + fields[col_close] + "'");
            continue;
        }
        PriceBar bar{*date, *open, *close, {}, {}, {}};
        auto optional_field = [&](int col) -> std::optional<double> {
            if (col < 0 || col >= static_cast<int>(fields.size())) return std::nullopt;
            return parse_number(fields[col], spec.decimal_comma);
        };
        bar.high = optional_field(col_high);
        bar.low = optional_field(col_low);
        bar.volume = optional_field(col_vol);
        result.series.bars.push_back(bar);
    }
    result.data_rows = row;
    if (result.series.bars.empty()) throw InputError("empty-input: zero parseable rows");
    return result;
}

ParseResult parse_csv(const std::string& text, const CsvSpec& spec, const std::string& symbol) {
    std::istringstream ss(text);
    return parse_csv(ss, spec, symbol);
}

ValidateResult sort_and_validate(const PriceSeries& series) {
    if (series.bars.empty()) throw InputError("empty series");

    ValidateResult result;
    result.series.symbol = series.symbol;
    result.series.source = series.source;

    // Stable sort keeps the first occurrence of a duplicate date first, so
    // the dedup below is order-deterministic.
    std::vector<std::size_t> order(series.bars.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return series.bars[a].date < series.bars[b].date;
    });

    for (std::size_t idx : order) {
        const PriceBar& bar = series.bars[idx];
        if (!result.series.bars.empty() && result.series.bars.back().date == bar.date) {
            result.dropped_duplicates.push_back(
                {idx + 1, "duplicate date " + bar.date.iso() + ", first occurrence kept"});
            continue;
        }
        result.series.bars.push_back(bar);
    }

    if (result.series.bars.size() < 2)
        throw TooShortError("series too short after deduplication: " +
                            std::to_string(result.series.bars.size()) + " bars, need >= 2");
    return result;
}

}  // namespace dnvol

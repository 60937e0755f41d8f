#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "dnvol/date.hpp"

namespace dnvol {

struct PriceBar {
    Date date;
    double open = 0.0;   // > 0 after validation
    double close = 0.0;  // > 0 after validation
    std::optional<double> high;
    std::optional<double> low;
    std::optional<double> volume;
};

struct PriceSeries {
    std::string symbol;
    std::vector<PriceBar> bars;  // strictly increasing by date after sort_and_validate
    std::string source;
};

enum class DateFormat { iso8601, dmy_dots };  // YYYY-MM-DD or DD.MM.YYYY

// Column mapping for delimiter-separated OHLC exports.
struct CsvSpec {
    std::string date_col = "Date";
    std::string open_col = "Open";
    std::string close_col = "Close";
    std::string high_col;    // empty = not mapped
    std::string low_col;
    std::string volume_col;
    DateFormat date_format = DateFormat::iso8601;
    bool decimal_comma = false;  // European exports; implies a non-comma delimiter
    char delimiter = 0;          // 0 = auto-detect from the header (';' or ',')
};

struct RejectedRow {
    std::size_t row_number;  // 1-based, counting data rows after the header
    std::string reason;
};

struct ParseResult {
    PriceSeries series;
    std::vector<RejectedRow> rejected;
    std::size_t data_rows = 0;  // accepted + rejected == data_rows
};

// Parses delimiter-separated text with a header row into one PriceBar per
// well-formed data row. Malformed rows go to the rejection log, never
// silently dropped. Throws ConfigError if the header lacks a mapped column,
// InputError if no row parses.
ParseResult parse_csv(std::istream& text, const CsvSpec& spec, const std::string& symbol = "");
ParseResult parse_csv(const std::string& text, const CsvSpec& spec, const std::string& symbol = "");

struct ValidateResult {
    PriceSeries series;
    std::vector<RejectedRow> dropped_duplicates;  // row index into the input bars
};

// Stable-sorts bars by date and keeps the first occurrence of each duplicate
// date. Throws TooShortError if fewer than 2 bars survive.
ValidateResult sort_and_validate(const PriceSeries& series);

std::optional<Date> parse_date(const std::string& field, DateFormat format);
std::optional<double> parse_number(const std::string& field, bool decimal_comma);

}  // namespace dnvol

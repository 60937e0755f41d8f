#include "doctest.h"

#include "dnvol/errors.hpp"
#include "dnvol/ohlc.hpp"

using namespace dnvol;

TEST_CASE("single well-formed row") {
    auto result = parse_csv(std::string("Date,Open,Close\n2020-01-02,100.0,105.0\n"), {});
    REQUIRE(result.series.bars.size() == 1);
    CHECK(result.series.bars[0].date == Date{2020, 1, 2});
    CHECK(result.series.bars[0].open == 100.0);
    CHECK(result.series.bars[0].close == 105.0);
    CHECK(result.rejected.empty());
}

TEST_CASE("row with missing open is rejected and logged with its row number") {
    auto result = parse_csv(
        std::string("Date,Open,Close\n2020-01-02,100.0,105.0\n2020-01-03,,104.0\n"), {});
    CHECK(result.series.bars.size() == 1);
    REQUIRE(result.rejected.size() == 1);
    CHECK(result.rejected[0].row_number == 2);
    CHECK(result.rejected[0].reason.find("open") != std::string::npos);
}

TEST_CASE("Yahoo seven-column layout uses raw Open/Close, not Adj Close") {
    std::string text =
        "Date,Open,High,Low,Close,Adj Close,Volume\n"
        "2020-01-02,100.0,110.0,95.0,105.0,52.5,1000\n";
    CsvSpec spec;
    spec.high_col = "High";
    spec.low_col = "Low";
    spec.volume_col = "Volume";
    auto result = parse_csv(text, spec);
    REQUIRE(result.series.bars.size() == 1);
    CHECK(result.series.bars[0].open == 100.0);
    CHECK(result.series.bars[0].close == 105.0);  // never the adjusted 52.5
    CHECK(result.series.bars[0].high == 110.0);
    CHECK(result.series.bars[0].volume == 1000.0);
}

TEST_CASE("unparseable date rejected") {
    auto result =
        parse_csv(std::string("Date,Open,Close\nnot-a-date,1,2\n2020-01-02,1,2\n"), {});
    CHECK(result.series.bars.size() == 1);
    REQUIRE(result.rejected.size() == 1);
    CHECK(result.rejected[0].row_number == 1);
}

TEST_CASE("every input row accounted for: accepted + rejected = data rows") {
    std::string text =
        "Date,Open,Close\n"
        "2020-01-02,100,101\n"
        "bad,1,2\n"
        "2020-01-03,,1\n"
        "2020-01-06,99,98\n";
    auto result = parse_csv(text, {});
    CHECK(result.series.bars.size() + result.rejected.size() == result.data_rows);
    CHECK(result.data_rows == 4);
}

TEST_CASE("header missing a mapped column is a configuration error") {
    CHECK_THROWS_AS(parse_csv(std::string("Date,Last\n2020-01-02,100\n"), {}), ConfigError);
}

TEST_CASE("zero parseable rows is a fatal input error") {
    CHECK_THROWS_AS(parse_csv(std::string("Date,Open,Close\njunk,junk,junk\n"), {}),
                    InputError);
    CHECK_THROWS_AS(parse_csv(std::string(""), {}), InputError);
}

TEST_CASE("DD.MM.YYYY and decimal comma with semicolon delimiter") {
    CsvSpec spec;
    spec.date_format = DateFormat::dmy_dots;
    spec.decimal_comma = true;
    auto result = parse_csv(std::string("Date;Open;Close\n03.01.2020;100,5;101,25\n"), spec);
    REQUIRE(result.series.bars.size() == 1);
    CHECK(result.series.bars[0].date == Date{2020, 1, 3});
    CHECK(result.series.bars[0].open == 100.5);
    CHECK(result.series.bars[0].close == 101.25);
}

TEST_CASE("decimal comma with comma delimiter is rejected") {
    CsvSpec spec;
    spec.decimal_comma = true;
    spec.delimiter = ',';
    CHECK_THROWS_AS(parse_csv(std::string("Date,Open,Close\n"), spec), ConfigError);
}

TEST_CASE("invalid calendar dates are rejected") {
    auto result = parse_csv(
        std::string("Date,Open,Close\n2020-02-30,1,2\n2020-13-01,1,2\n2020-02-29,1,2\n"), {});
    CHECK(result.series.bars.size() == 1);  // 2020 is a leap year
    CHECK(result.rejected.size() == 2);
}

static PriceSeries make_series(std::vector<Date> dates) {
    PriceSeries s;
    double p = 100.0;
    for (const auto& d : dates) {
        s.bars.push_back({d, p, p + 1.0, {}, {}, {}});
        p += 1.0;
    }
    return s;
}

TEST_CASE("sort_and_validate reorders by date") {
    auto s = make_series({{2020, 1, 3}, {2020, 1, 2}});
    auto v = sort_and_validate(s);
    CHECK(v.series.bars[0].date == Date{2020, 1, 2});
    CHECK(v.series.bars[1].date == Date{2020, 1, 3});
    CHECK(v.dropped_duplicates.empty());
}

TEST_CASE("duplicate dates: first occurrence kept, rest logged") {
    PriceSeries s;
    s.bars.push_back({{2020, 1, 2}, 100.0, 101.0, {}, {}, {}});
    s.bars.push_back({{2020, 1, 3}, 50.0, 51.0, {}, {}, {}});
    s.bars.push_back({{2020, 1, 2}, 999.0, 999.0, {}, {}, {}});
    auto v = sort_and_validate(s);
    REQUIRE(v.series.bars.size() == 2);
    CHECK(v.series.bars[0].open == 100.0);  // first occurrence, not the 999 one
    REQUIRE(v.dropped_duplicates.size() == 1);
    CHECK(v.dropped_duplicates[0].reason.find("2020-01-02") != std::string::npos);
}

TEST_CASE("already-sorted series returned unchanged with empty log") {
    auto s = make_series({{2020, 1, 2}, {2020, 1, 3}, {2020, 1, 6}, {2020, 1, 7}, {2020, 1, 8}});
    auto v = sort_and_validate(s);
    CHECK(v.dropped_duplicates.empty());
    REQUIRE(v.series.bars.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) CHECK(v.series.bars[i].date == s.bars[i].date);
}

TEST_CASE("sort_and_validate is idempotent") {
    auto s = make_series({{2020, 1, 7}, {2020, 1, 2}, {2020, 1, 3}});
    auto once = sort_and_validate(s);
    auto twice = sort_and_validate(once.series);
    CHECK(twice.dropped_duplicates.empty());
    REQUIRE(twice.series.bars.size() == once.series.bars.size());
    for (std::size_t i = 0; i < once.series.bars.size(); ++i) {
        CHECK(twice.series.bars[i].date == once.series.bars[i].date);
        CHECK(twice.series.bars[i].open == once.series.bars[i].open);
    }
}

TEST_CASE("fewer than 2 bars after dedup is a too-short error") {
    PriceSeries s;
    s.bars.push_back({{2020, 1, 2}, 1.0, 2.0, {}, {}, {}});
    s.bars.push_back({{2020, 1, 2}, 3.0, 4.0, {}, {}, {}});
    CHECK_THROWS_AS(sort_and_validate(s), TooShortError);
}

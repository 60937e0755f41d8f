#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dnvol/asymmetry.hpp"
#include "dnvol/cleaning.hpp"
#include "dnvol/errors.hpp"
#include "dnvol/ohlc.hpp"
#include "dnvol/rank_stats.hpp"
#include "dnvol/report.hpp"
#include "dnvol/returns.hpp"
#include "dnvol/rng.hpp"
#include "dnvol/synth.hpp"

namespace py = pybind11;
using namespace dnvol;

namespace {

SynthSpec make_spec(SynthKind kind, std::size_t n, double rho, double coupling,
                    std::uint64_t seed) {
    return {kind, n, rho, coupling, seed};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Intra-day vs overnight volatility asymmetry analytics";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<DegenerateSampleError>(m, "DegenerateSampleError", PyExc_ValueError);
    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

    py::class_<Date>(m, "Date")
        .def(py::init<int, int, int>(), py::arg("year"), py::arg("month"), py::arg("day"))
        .def_readonly("year", &Date::year)
        .def_readonly("month", &Date::month)
        .def_readonly("day", &Date::day)
        .def("iso", &Date::iso)
        .def("__repr__", [](const Date& d) { return "Date(" + d.iso() + ")"; });

    py::class_<PriceBar>(m, "PriceBar")
        .def_readonly("date", &PriceBar::date)
        .def_readonly("open", &PriceBar::open)
        .def_readonly("close", &PriceBar::close);

    py::class_<PriceSeries>(m, "PriceSeries")
        .def_readonly("symbol", &PriceSeries::symbol)
        .def_readonly("bars", &PriceSeries::bars)
        .def("__len__", [](const PriceSeries& s) { return s.bars.size(); });

    py::class_<CsvSpec>(m, "CsvSpec")
        .def(py::init<>())
        .def_readwrite("date_col", &CsvSpec::date_col)
        .def_readwrite("open_col", &CsvSpec::open_col)
        .def_readwrite("close_col", &CsvSpec::close_col)
        .def_readwrite("decimal_comma", &CsvSpec::decimal_comma);

    py::class_<ReturnSeries>(m, "ReturnSeries")
        .def_readonly("symbol", &ReturnSeries::symbol)
        .def_readonly("intraday", &ReturnSeries::intraday)
        .def_readonly("overnight", &ReturnSeries::overnight)
        .def_property_readonly("dates", [](const ReturnSeries& rs) { return rs.dates; })
        .def("vol_intraday", &ReturnSeries::vol_intraday)
        .def("vol_overnight", &ReturnSeries::vol_overnight)
        .def("days", &ReturnSeries::days);

    py::enum_<CorrMethod>(m, "CorrMethod")
        .value("spearman", CorrMethod::spearman)
        .value("kendall", CorrMethod::kendall)
        .value("pearson", CorrMethod::pearson);

    py::class_<CorrelationResult>(m, "CorrelationResult")
        .def_readonly("estimate", &CorrelationResult::estimate)
        .def_readonly("n_pairs", &CorrelationResult::n_pairs)
        .def_readonly("method", &CorrelationResult::method);

    py::class_<AsymmetryReport>(m, "AsymmetryReport")
        .def_readonly("symbol", &AsymmetryReport::symbol)
        .def_readonly("c_nd", &AsymmetryReport::c_nd)
        .def_readonly("c_dn", &AsymmetryReport::c_dn)
        .def_readonly("delta", &AsymmetryReport::delta)
        .def_readonly("ratio_defined", &AsymmetryReport::ratio_defined)
        .def_readonly("ratio", &AsymmetryReport::ratio)
        .def_readonly("n_pairs", &AsymmetryReport::n_pairs)
        .def_readonly("ci_delta", &AsymmetryReport::ci_delta)
        .def_readonly("p_value", &AsymmetryReport::p_value)
        .def("to_json", [](const AsymmetryReport& r) { return report_to_json(r); });

    m.def("parse_csv",
          [](const std::string& text, const CsvSpec& spec, const std::string& symbol) {
              auto result = parse_csv(text, spec, symbol);
              return sort_and_validate(result.series).series;
          },
          py::arg("text"), py::arg("spec") = CsvSpec{}, py::arg("symbol") = "",
          "Parse OHLC CSV text into a validated, date-sorted PriceSeries");

    m.def("clean_series",
          [](const PriceSeries& s, std::size_t min_length) {
              CleanPolicy policy;
              policy.min_length = min_length;
              return clean_series(s, policy).series;
          },
          py::arg("series"), py::arg("min_length") = 30);

    m.def("compute_returns", &compute_returns, py::arg("series"));

    m.def("midranks",
          [](const std::vector<double>& x) { return midranks(x).ranks; }, py::arg("x"));
    m.def("spearman",
          [](const std::vector<double>& x, const std::vector<double>& y) {
              return spearman(x, y);
          },
          py::arg("x"), py::arg("y"));
    m.def("kendall_tau",
          [](const std::vector<double>& x, const std::vector<double>& y) {
              return kendall_tau(x, y);
          },
          py::arg("x"), py::arg("y"));
    m.def("pearson",
          [](const std::vector<double>& x, const std::vector<double>& y) {
              return pearson(x, y);
          },
          py::arg("x"), py::arg("y"));

    m.def("compute_asymmetry", &compute_asymmetry, py::arg("returns"),
          py::arg("method") = CorrMethod::spearman);
    m.def("bootstrap_asymmetry", &bootstrap_asymmetry, py::arg("returns"),
          py::arg("n_boot"), py::arg("block_len"), py::arg("seed"),
          py::arg("method") = CorrMethod::spearman);
    m.def("lagged_xcorr",
          [](const ReturnSeries& rs, int max_lag, CorrMethod method) {
              std::vector<py::tuple> out;
              for (const auto& l : lagged_xcorr(rs, max_lag, method))
                  out.push_back(py::make_tuple(l.lag, l.night_leads_day.estimate,
                                               l.day_leads_night.estimate));
              return out;
          },
          py::arg("returns"), py::arg("max_lag"),
          py::arg("method") = CorrMethod::spearman);
    m.def("default_block_len", &default_block_len, py::arg("n_days"));

    m.def("copula_pairs",
          [](std::size_t n, double rho, std::uint64_t seed) {
              return copula_pairs(make_spec(SynthKind::copula_pair, n, rho, 0.0, seed));
          },
          py::arg("n"), py::arg("rho"), py::arg("seed") = 0);
    m.def("coupled_vol_process",
          [](std::size_t n, double coupling, std::uint64_t seed) {
              return coupled_vol_process(make_spec(SynthKind::coupled_vol, n, 0.0, coupling, seed));
          },
          py::arg("n"), py::arg("coupling"), py::arg("seed") = 0);
    m.def("null_vol_process",
          [](std::size_t n, std::uint64_t seed) {
              return null_vol_process(make_spec(SynthKind::null_vol, n, 0.0, 0.0, seed));
          },
          py::arg("n"), py::arg("seed") = 0);
    m.def("reconstruct_prices", &reconstruct_prices, py::arg("returns"));
    m.def("to_csv", &to_csv, py::arg("series"));

    m.attr("rng_algorithm") = kRngAlgorithm;
}

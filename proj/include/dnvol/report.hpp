#pragma once

#include <string>
#include <vector>

#include "dnvol/asymmetry.hpp"
#include "dnvol/returns.hpp"

namespace dnvol {

enum class PanelKind { timeseries, scatter, ratio_bars };
enum class PanelFormat { csv, json, svg };

PanelFormat panel_format_from_string(const std::string& s);
std::string to_string(PanelFormat f);

struct PanelSpec {
    PanelKind kind = PanelKind::timeseries;
    std::string title;
    PanelFormat format = PanelFormat::csv;
};

// All emitters are deterministic: identical inputs give byte-identical
// documents. Numbers are formatted to 6 significant digits.
std::string format_number(double v);

// Two-panel day/night return history (intraday over k, overnight over k).
std::string emit_timeseries(const ReturnSeries& rs, const PanelSpec& spec);

// One point per equity at (c_dn, c_nd); SVG draws the identity diagonal so
// points above it show the asymmetry directly.
std::string emit_scatter(const std::vector<AsymmetryReport>& reports, const PanelSpec& spec);

// Ratio c_nd/c_dn per symbol in input order; undefined ratios are emitted
// with an explicit marker, never dropped.
std::string emit_ratios(const std::vector<AsymmetryReport>& reports, const PanelSpec& spec);

// Structured-record (JSON) round-trip for AsymmetryReport, used by the CLI
// to save reports and re-render panels without recomputation.
std::string report_to_json(const AsymmetryReport& report);
std::string reports_to_json(const std::vector<AsymmetryReport>& reports);
AsymmetryReport report_from_json(const std::string& text);
std::vector<AsymmetryReport> reports_from_json(const std::string& text);

// Flat table row (csv) form of a report.
std::string report_csv_header();
std::string report_to_csv_row(const AsymmetryReport& report);

}  // namespace dnvol

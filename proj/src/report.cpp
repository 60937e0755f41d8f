#include "dnvol/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "dnvol/errors.hpp"
#include "json.hpp"

namespace dnvol {

namespace {

using ordered_json = nlohmann::ordered_json;

// Round to the 6-significant-digit grid used by every emitter, so csv and
// json carry identical numeric values.
double round6(double v) {
    return std::strtod(format_number(v).c_str(), nullptr);
}

struct Range {
    double lo, hi;
    void pad(double frac) {
        double span = hi - lo;
        if (span == 0.0) span = std::abs(hi) > 0.0 ? std::abs(hi) : 1.0;
        lo -= frac * span;
        hi += frac * span;
    }
};

Range data_range(const std::vector<double>& values) {
    Range r{values.front(), values.front()};
    for (double v : values) {
        r.lo = std::min(r.lo, v);
        r.hi = std::max(r.hi, v);
    }
    return r;
}

// Maps data values into pixel coordinates (SVG y grows downward).
struct Scale {
    Range domain;
    double px_lo, px_hi;
    double operator()(double v) const {
        return px_lo + (v - domain.lo) / (domain.hi - domain.lo) * (px_hi - px_lo);
    }
};

std::string svg_open(double width, double height) {
    std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"";
    s += format_number(width) + "\" height=\"" + format_number(height) + "\" viewBox=\"0 0 ";
    s += format_number(width) + " " + format_number(height) + "\">\n";
    return s;
}

std::string svg_text(double x, double y, const std::string& text,
                     const std::string& extra = "") {
    return "<text x=\"" + format_number(x) + "\" y=\"" + format_number(y) +
           "\" font-family=\"sans-serif\" font-size=\"12\"" + extra + ">" + text +
           "</text>\n";
}

std::string svg_line(double x1, double y1, double x2, double y2, const std::string& stroke) {
    return "<line x1=\"" + format_number(x1) + "\" y1=\"" + format_number(y1) + "\" x2=\"" +
           format_number(x2) + "\" y2=\"" + format_number(y2) + "\" stroke=\"" + stroke +
           "\" stroke-width=\"1\"/>\n";
}

}  // namespace

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

PanelFormat panel_format_from_string(const std::string& s) {
    if (s == "csv") return PanelFormat::csv;
    if (s == "json") return PanelFormat::json;
    if (s == "svg") return PanelFormat::svg;
    throw ConfigError("unsupported output format '" + s + "'");
}

std::string to_string(PanelFormat f) {
    switch (f) {
        case PanelFormat::csv: return "csv";
        case PanelFormat::json: return "json";
        case PanelFormat::svg: return "svg";
    }
    return "?";
}

std::string emit_timeseries(const ReturnSeries& rs, const PanelSpec& spec) {
    if (rs.days() == 0) throw InputError("empty return series");

    switch (spec.format) {
        case PanelFormat::csv: {
            std::string out = "date,d,n\n";
            for (std::size_t i = 0; i < rs.days(); ++i) {
                out += rs.dates[i].iso() + "," + format_number(rs.intraday[i]) + ",";
                if (i > 0) out += format_number(rs.overnight[i - 1]);
                out += "\n";
            }
            return out;
        }
        case PanelFormat::json: {
            ordered_json doc;
            doc["panel"] = "timeseries";
            doc["title"] = spec.title;
            doc["data"] = ordered_json::array();
            for (std::size_t i = 0; i < rs.days(); ++i) {
                ordered_json row;
                row["date"] = rs.dates[i].iso();
                row["d"] = round6(rs.intraday[i]);
                if (i > 0)
                    row["n"] = round6(rs.overnight[i - 1]);
                else
                    row["n"] = nullptr;
                doc["data"].push_back(row);
            }
            return doc.dump(2) + "\n";
        }
        case PanelFormat::svg: {
            constexpr double width = 800, panel_h = 220, margin = 50, gap = 40;
            double height = 2 * panel_h + gap + 2 * margin;
            std::string out = svg_open(width, height);
            out += svg_text(margin, 20, spec.title);

            auto panel = [&](const std::vector<double>& values, double top,
                             const std::string& label, std::size_t k_count) {
                Range yr = data_range(values);
                yr.pad(0.05);
                Scale sy{yr, top + panel_h, top};  // inverted: larger value higher up
                Scale sx{{0.0, static_cast<double>(k_count - 1)}, margin, width - margin};
                out += svg_line(margin, top + panel_h, width - margin, top + panel_h, "black");
                out += svg_line(margin, top, margin, top + panel_h, "black");
                out += svg_text(margin, top - 6, label);
                std::string points;
                for (std::size_t i = 0; i < values.size(); ++i) {
                    if (i) points += " ";
                    points += format_number(sx(static_cast<double>(i))) + "," +
                              format_number(sy(values[i]));
                }
                out += "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1\" points=\"" +
                       points + "\"/>\n";
            };
            panel(rs.intraday, margin + 20, "intra-day returns d_k", rs.days());
            if (!rs.overnight.empty())
                panel(rs.overnight, margin + 20 + panel_h + gap, "overnight returns n_k",
                      rs.days());
            out += "</svg>\n";
            return out;
        }
    }
    throw ConfigError("unsupported output format");
}

std::string emit_scatter(const std::vector<AsymmetryReport>& reports, const PanelSpec& spec) {
    if (reports.empty()) throw InputError("no reports to plot");

    switch (spec.format) {
        case PanelFormat::csv: {
            std::string out = "symbol,c_dn,c_nd\n";
            for (const auto& r : reports)
                out += r.symbol + "," + format_number(r.c_dn) + "," + format_number(r.c_nd) +
                       "\n";
            return out;
        }
        case PanelFormat::json: {
            ordered_json doc;
            doc["panel"] = "scatter";
            doc["title"] = spec.title;
            doc["data"] = ordered_json::array();
            for (const auto& r : reports)
                doc["data"].push_back(
                    {{"symbol", r.symbol}, {"c_dn", round6(r.c_dn)}, {"c_nd", round6(r.c_nd)}});
            return doc.dump(2) + "\n";
        }
        case PanelFormat::svg: {
            constexpr double size = 520, margin = 60;
            std::vector<double> all;
            for (const auto& r : reports) {
                all.push_back(r.c_dn);
                all.push_back(r.c_nd);
            }
            // One shared scale for both axes, so "above the diagonal" means
            // exactly c_nd > c_dn.
            Range dr = data_range(all);
            dr.pad(0.10);
            Scale sx{dr, margin, size - margin};
            Scale sy{dr, size - margin, margin};

            std::string out = svg_open(size, size);
            out += svg_text(margin, 24, spec.title);
            out += svg_line(margin, size - margin, size - margin, size - margin, "black");
            out += svg_line(margin, margin, margin, size - margin, "black");
            out += svg_text(size / 2 - 20, size - 20, "C_dn");
            out += svg_text(14, size / 2, "C_nd");
            // Identity diagonal: points above it satisfy C_nd > C_dn.
            out += svg_line(sx(dr.lo), sy(dr.lo), sx(dr.hi), sy(dr.hi), "#888888");
            for (const auto& r : reports) {
                out += "<circle cx=\"" + format_number(sx(r.c_dn)) + "\" cy=\"" +
                       format_number(sy(r.c_nd)) + "\" r=\"4\" fill=\"#d62728\"/>\n";
                out += svg_text(sx(r.c_dn) + 6, sy(r.c_nd) - 6, r.symbol,
                                " fill=\"#555555\" font-size=\"9\"");
            }
            out += "</svg>\n";
            return out;
        }
    }
    throw ConfigError("unsupported output format");
}

std::string emit_ratios(const std::vector<AsymmetryReport>& reports, const PanelSpec& spec) {
    if (reports.empty()) throw InputError("no reports to plot");

    switch (spec.format) {
        case PanelFormat::csv: {
            std::string out = "symbol,group,ratio\n";
            for (const auto& r : reports) {
                out += r.symbol + "," + r.group + ",";
                out += r.ratio_defined ? format_number(r.ratio) : "undefined";
                out += "\n";
            }
            return out;
        }
        case PanelFormat::json: {
            ordered_json doc;
            doc["panel"] = "ratio_bars";
            doc["title"] = spec.title;
            doc["data"] = ordered_json::array();
            for (const auto& r : reports) {
                ordered_json row;
                row["symbol"] = r.symbol;
                row["group"] = r.group;
                if (r.ratio_defined)
                    row["ratio"] = round6(r.ratio);
                else
                    row["ratio"] = nullptr;
                doc["data"].push_back(row);
            }
            return doc.dump(2) + "\n";
        }
        case PanelFormat::svg: {
            constexpr double bar_w = 28, bar_gap = 14, margin = 60, plot_h = 320;
            double width = 2 * margin + reports.size() * (bar_w + bar_gap);
            double height = plot_h + 2 * margin + 40;

            std::vector<double> defined{0.0, 1.0};  // axis always shows 0 and 1
            for (const auto& r : reports)
                if (r.ratio_defined) defined.push_back(r.ratio);
            Range yr = data_range(defined);
            yr.pad(0.08);  // auto-scales, ratios above 2 render without clipping
            Scale sy{yr, margin + plot_h, margin};

            std::string out = svg_open(width, height);
            out += svg_text(margin, 24, spec.title);
            out += svg_line(margin - 10, sy(0.0), width - margin + 10, sy(0.0), "black");
            out += svg_line(margin - 10, sy(1.0), width - margin + 10, sy(1.0), "#888888");
            out += svg_text(6, sy(1.0) + 4, "1");

            double x = margin;
            for (const auto& r : reports) {
                if (r.ratio_defined) {
                    double y0 = sy(0.0), y1 = sy(r.ratio);
                    double top = std::min(y0, y1);
                    out += "<rect x=\"" + format_number(x) + "\" y=\"" + format_number(top) +
                           "\" width=\"" + format_number(bar_w) + "\" height=\"" +
                           format_number(std::abs(y1 - y0)) + "\" fill=\"#1f77b4\"/>\n";
                } else {
                    out += svg_text(x, sy(0.0) - 6, "undefined", " fill=\"#d62728\" font-size=\"9\"");
                }
                out += svg_text(x, margin + plot_h + 16, r.symbol,
                                " font-size=\"9\" transform=\"rotate(45 " + format_number(x) +
                                    " " + format_number(margin + plot_h + 16) + ")\"");
                x += bar_w + bar_gap;
            }
            out += "</svg>\n";
            return out;
        }
    }
    throw ConfigError("unsupported output format");
}

namespace {

ordered_json report_to_json_obj(const AsymmetryReport& r) {
    ordered_json doc;
    doc["symbol"] = r.symbol;
    doc["group"] = r.group;
    doc["method"] = to_string(r.method);
    doc["c_nd"] = r.c_nd;
    doc["c_dn"] = r.c_dn;
    doc["delta"] = r.delta;
    doc["ratio_defined"] = r.ratio_defined;
    if (r.ratio_defined)
        doc["ratio"] = r.ratio;
    else
        doc["ratio"] = nullptr;
    doc["n_pairs"] = r.n_pairs;
    if (r.ci_delta)
        doc["ci_delta"] = {r.ci_delta->first, r.ci_delta->second};
    else
        doc["ci_delta"] = nullptr;
    if (r.p_value)
        doc["p_value"] = *r.p_value;
    else
        doc["p_value"] = nullptr;
    if (r.seed)
        doc["seed"] = *r.seed;
    else
        doc["seed"] = nullptr;
    return doc;
}

AsymmetryReport report_from_json_obj(const ordered_json& doc) {
    AsymmetryReport r;
    r.symbol = doc.at("symbol").get<std::string>();
    r.group = doc.value("group", std::string{});
    r.method = corr_method_from_string(doc.at("method").get<std::string>());
    r.c_nd = doc.at("c_nd").get<double>();
    r.c_dn = doc.at("c_dn").get<double>();
    r.delta = doc.at("delta").get<double>();
    r.ratio_defined = doc.at("ratio_defined").get<bool>();
    if (r.ratio_defined) r.ratio = doc.at("ratio").get<double>();
    r.n_pairs = doc.at("n_pairs").get<std::size_t>();
    if (!doc.at("ci_delta").is_null())
        r.ci_delta = {doc["ci_delta"][0].get<double>(), doc["ci_delta"][1].get<double>()};
    if (!doc.at("p_value").is_null()) r.p_value = doc["p_value"].get<double>();
    if (!doc.at("seed").is_null()) r.seed = doc["seed"].get<std::uint64_t>();
    return r;
}

}  // namespace

std::string report_to_json(const AsymmetryReport& report) {
    return report_to_json_obj(report).dump(2) + "\n";
}

std::string reports_to_json(const std::vector<AsymmetryReport>& reports) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) arr.push_back(report_to_json_obj(r));
    return arr.dump(2) + "\n";
}

AsymmetryReport report_from_json(const std::string& text) {
    return report_from_json_obj(ordered_json::parse(text));
}

std::vector<AsymmetryReport> reports_from_json(const std::string& text) {
    auto arr = ordered_json::parse(text);
    if (!arr.is_array()) throw InputError("expected a JSON array of reports");
    std::vector<AsymmetryReport> out;
    for (const auto& item : arr) out.push_back(report_from_json_obj(item));
    return out;
}

std::string report_csv_header() {
    return "symbol,group,method,c_nd,c_dn,delta,ratio,n_pairs,ci_lo,ci_hi,p_value,seed\n";
}

std::string report_to_csv_row(const AsymmetryReport& r) {
    std::string out = r.symbol + "," + r.group + "," + to_string(r.method) + "," +
                      format_number(r.c_nd) + "," + format_number(r.c_dn) + "," +
                      format_number(r.delta) + ",";
    out += r.ratio_defined ? format_number(r.ratio) : "undefined";
    out += "," + std::to_string(r.n_pairs) + ",";
    if (r.ci_delta)
        out += format_number(r.ci_delta->first) + "," + format_number(r.ci_delta->second);
    else
        out += ",";
    out += ",";
    if (r.p_value) out += format_number(*r.p_value);
    out += ",";
    if (r.seed) out += std::to_string(*r.seed);
    out += "\n";
    return out;
}

}  // namespace dnvol

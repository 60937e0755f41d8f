// dnvol: decomposes OHLC price histories into intra-day and overnight
// log-returns and measures the time asymmetry of their volatility
// cross-correlations.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dnvol/asymmetry.hpp"
#include "dnvol/cleaning.hpp"
#include "dnvol/errors.hpp"
#include "dnvol/ohlc.hpp"
#include "dnvol/report.hpp"
#include "dnvol/returns.hpp"
#include "dnvol/rng.hpp"
#include "dnvol/synth.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

struct CommonOpts {
    std::string date_col = "Date";
    std::string open_col = "Open";
    std::string close_col = "Close";
    std::string date_format = "iso";
    bool decimal_comma = false;
    std::string method = "spearman";
    std::size_t min_length = 30;
    double max_abs_logreturn = 0.0;  // 0 = unset
    std::size_t n_boot = 0;          // 0 = no bootstrap
    std::size_t block_len = 0;       // 0 = default ceil((N-1)^(1/3))
    std::uint64_t seed = 0;
    std::string out_dir = ".";
    std::vector<std::string> formats = {"json"};
    int max_lag = 0;
};

void add_common_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--date-col", o.date_col, "Header name of the date column");
    cmd->add_option("--open-col", o.open_col, "Header name of the open column");
    cmd->add_option("--close-col", o.close_col, "Header name of the close column");
    cmd->add_option("--date-format", o.date_format, "Date format: iso (YYYY-MM-DD) or dmy (DD.MM.YYYY)");
    cmd->add_flag("--decimal-comma", o.decimal_comma, "Numbers use decimal comma (semicolon-delimited files)");
    cmd->add_option("--method", o.method, "Rank correlation: spearman, kendall or pearson");
    cmd->add_option("--min-length", o.min_length, "Minimum bars after cleaning");
    cmd->add_option("--max-abs-logreturn", o.max_abs_logreturn, "Drop bars with |log-return| above this (default: keep all)");
    cmd->add_option("--boot", o.n_boot, "Bootstrap resamples (0 = no bootstrap)");
    cmd->add_option("--block-len", o.block_len, "Bootstrap block length (0 = ceil((N-1)^(1/3)))");
    cmd->add_option("--seed", o.seed, "RNG seed");
    cmd->add_option("--out", o.out_dir, "Output directory");
    cmd->add_option("--format", o.formats, "Panel formats: csv, json, svg")->delimiter(',');
    cmd->add_option("--max-lag", o.max_lag, "Also compute lagged cross-correlations up to this lag");
}

dnvol::CsvSpec make_csv_spec(const CommonOpts& o) {
    dnvol::CsvSpec spec;
    spec.date_col = o.date_col;
    spec.open_col = o.open_col;
    spec.close_col = o.close_col;
    if (o.date_format == "iso")
        spec.date_format = dnvol::DateFormat::iso8601;
    else if (o.date_format == "dmy")
        spec.date_format = dnvol::DateFormat::dmy_dots;
    else
        throw dnvol::ConfigError("unknown date format '" + o.date_format + "'");
    spec.decimal_comma = o.decimal_comma;
    return spec;
}

dnvol::CleanPolicy make_policy(const CommonOpts& o) {
    dnvol::CleanPolicy policy;
    policy.min_length = o.min_length;
    if (o.max_abs_logreturn > 0.0) policy.max_abs_logreturn = o.max_abs_logreturn;
    return policy;
}

void write_file(const fs::path& path, const std::string& content) {
    fs::create_directories(path.parent_path().empty() ? "." : path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw dnvol::InputError("cannot open output file " + path.string());
    out << content;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw dnvol::InputError("cannot read input file " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct PipelineOutput {
    dnvol::ReturnSeries returns;
    dnvol::ParseResult parsed;
    dnvol::CleanLog clean_log;
};

// Configuration is validated before any file is touched, so flag mistakes
// always exit with the configuration code.
void validate_config(const CommonOpts& o) {
    dnvol::corr_method_from_string(o.method);
    make_csv_spec(o);
    for (const auto& fmt : o.formats) dnvol::panel_format_from_string(fmt);
    if (o.max_lag < 0) throw dnvol::ConfigError("max-lag must be >= 0");
}

PipelineOutput run_pipeline(const fs::path& input, const std::string& symbol,
                            const CommonOpts& o) {
    std::ifstream in(input);
    if (!in) throw dnvol::InputError("cannot read input file " + input.string());

    PipelineOutput out;
    out.parsed = dnvol::parse_csv(in, make_csv_spec(o), symbol);
    auto validated = dnvol::sort_and_validate(out.parsed.series);
    auto cleaned = dnvol::clean_series(validated.series, make_policy(o));
    out.clean_log = cleaned.log;
    out.returns = dnvol::compute_returns(cleaned.series);
    return out;
}

ordered_json logs_to_json(const PipelineOutput& p) {
    ordered_json doc;
    doc["data_rows"] = p.parsed.data_rows;
    doc["accepted"] = p.parsed.data_rows - p.parsed.rejected.size();
    doc["rejected"] = ordered_json::array();
    for (const auto& r : p.parsed.rejected)
        doc["rejected"].push_back({{"row", r.row_number}, {"reason", r.reason}});
    doc["cleaned"] = ordered_json::array();
    for (const auto& r : p.clean_log.removals)
        doc["cleaned"].push_back(
            {{"date", r.date.iso()}, {"field", r.field}, {"reason", r.reason}});
    return doc;
}

dnvol::AsymmetryReport analyze_one(const dnvol::ReturnSeries& rs, const CommonOpts& o) {
    auto method = dnvol::corr_method_from_string(o.method);
    if (o.n_boot > 0) {
        std::size_t block = o.block_len ? o.block_len : dnvol::default_block_len(rs.days());
        return dnvol::bootstrap_asymmetry(rs, o.n_boot, block, o.seed, method);
    }
    return dnvol::compute_asymmetry(rs, method);
}

void emit_panels(const std::string& stem, const CommonOpts& o,
                 const std::function<std::string(dnvol::PanelFormat)>& render) {
    for (const auto& fmt_name : o.formats) {
        auto fmt = dnvol::panel_format_from_string(fmt_name);
        write_file(fs::path(o.out_dir) / (stem + "." + fmt_name), render(fmt));
    }
}

std::string lags_to_csv(const std::vector<dnvol::LaggedCorrelation>& lags) {
    std::string out = "lag,night_leads_day,day_leads_night,n_pairs\n";
    for (const auto& l : lags)
        out += std::to_string(l.lag) + "," + dnvol::format_number(l.night_leads_day.estimate) +
               "," + dnvol::format_number(l.day_leads_night.estimate) + "," +
               std::to_string(l.night_leads_day.n_pairs) + "\n";
    return out;
}

int cmd_analyze(const std::string& input, const CommonOpts& o) {
    validate_config(o);
    fs::path in(input);
    std::string symbol = in.stem().string();
    auto p = run_pipeline(in, symbol, o);
    auto report = analyze_one(p.returns, o);

    fs::path out_dir(o.out_dir);
    write_file(out_dir / (symbol + "_report.json"), dnvol::report_to_json(report));
    write_file(out_dir / (symbol + "_log.json"), logs_to_json(p).dump(2) + "\n");
    emit_panels(symbol + "_timeseries", o, [&](dnvol::PanelFormat fmt) {
        return dnvol::emit_timeseries(p.returns, {dnvol::PanelKind::timeseries, symbol, fmt});
    });
    if (o.max_lag > 0) {
        auto lags = dnvol::lagged_xcorr(p.returns, o.max_lag,
                                        dnvol::corr_method_from_string(o.method));
        write_file(out_dir / (symbol + "_lags.csv"), lags_to_csv(lags));
    }
    std::cout << symbol << ": c_nd=" << dnvol::format_number(report.c_nd)
              << " c_dn=" << dnvol::format_number(report.c_dn)
              << " delta=" << dnvol::format_number(report.delta) << "\n";
    return 0;
}

int cmd_batch(const std::string& manifest, const CommonOpts& o) {
    validate_config(o);
    std::ifstream in(manifest);
    if (!in) throw dnvol::InputError("cannot read manifest " + manifest);

    // Manifest: one "symbol,path[,group]" per line.
    std::vector<dnvol::AsymmetryReport> reports;
    std::size_t total = 0, failed = 0;
    std::string line;
    fs::path manifest_dir = fs::path(manifest).parent_path();
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        ++total;
        std::istringstream ls(line);
        std::string symbol, path, group;
        std::getline(ls, symbol, ',');
        std::getline(ls, path, ',');
        std::getline(ls, group, ',');
        try {
            fs::path file(path);
            if (file.is_relative() && !manifest_dir.empty()) file = manifest_dir / file;
            auto p = run_pipeline(file, symbol, o);
            auto report = analyze_one(p.returns, o);
            report.group = group;
            write_file(fs::path(o.out_dir) / (symbol + "_report.json"),
                       dnvol::report_to_json(report));
            reports.push_back(std::move(report));
        } catch (const std::exception& e) {
            ++failed;
            std::cerr << "error: batch-entry " << symbol << ": " << e.what() << "\n";
        }
    }
    if (reports.empty()) throw dnvol::InputError("empty-input: no batch entry succeeded");

    // Deterministic aggregate order.
    std::sort(reports.begin(), reports.end(),
              [](const auto& a, const auto& b) { return a.symbol < b.symbol; });

    fs::path out_dir(o.out_dir);
    write_file(out_dir / "reports.json", dnvol::reports_to_json(reports));
    std::string table = dnvol::report_csv_header();
    for (const auto& r : reports) table += dnvol::report_to_csv_row(r);
    write_file(out_dir / "reports.csv", table);

    emit_panels("scatter", o, [&](dnvol::PanelFormat fmt) {
        return dnvol::emit_scatter(reports, {dnvol::PanelKind::scatter, "C_nd vs C_dn", fmt});
    });
    emit_panels("ratios", o, [&](dnvol::PanelFormat fmt) {
        return dnvol::emit_ratios(reports, {dnvol::PanelKind::ratio_bars, "C_nd/C_dn", fmt});
    });

    std::size_t satisfied = 0;
    for (const auto& r : reports)
        if (r.c_nd > r.c_dn) ++satisfied;
    std::string summary = std::to_string(satisfied) + " of " + std::to_string(reports.size()) +
                          " equities satisfy C_nd > C_dn\n";
    write_file(out_dir / "summary.txt", summary);
    std::cout << summary;

    if (failed > 0) {
        std::cerr << "error: batch-partial-failure: " << failed << " of " << total
                  << " entries failed\n";
        return 1;
    }
    return 0;
}

int cmd_synth(const std::string& kind, std::size_t n, double coupling, double rho,
              std::uint64_t seed, const std::string& out_path) {
    dnvol::SynthSpec spec;
    spec.n = n;
    spec.coupling = coupling;
    spec.rho = rho;
    spec.seed = seed;

    std::string csv;
    if (kind == "coupled") {
        spec.kind = dnvol::SynthKind::coupled_vol;
        csv = dnvol::to_csv(dnvol::reconstruct_prices(dnvol::coupled_vol_process(spec)));
    } else if (kind == "null") {
        spec.kind = dnvol::SynthKind::null_vol;
        csv = dnvol::to_csv(dnvol::reconstruct_prices(dnvol::null_vol_process(spec)));
    } else if (kind == "copula") {
        spec.kind = dnvol::SynthKind::copula_pair;
        auto [x, y] = dnvol::copula_pairs(spec);
        csv = "x,y\n";
        for (std::size_t i = 0; i < x.size(); ++i)
            csv += dnvol::format_number(x[i]) + "," + dnvol::format_number(y[i]) + "\n";
    } else {
        throw dnvol::ConfigError("unknown synth kind '" + kind + "'");
    }
    write_file(out_path, csv);

    ordered_json meta;
    meta["kind"] = kind;
    meta["n"] = n;
    meta["coupling"] = coupling;
    meta["rho"] = rho;
    meta["seed"] = seed;
    meta["rng"] = dnvol::kRngAlgorithm;
    write_file(out_path + ".meta.json", meta.dump(2) + "\n");
    return 0;
}

int cmd_report(const std::string& reports_path, const CommonOpts& o) {
    validate_config(o);
    auto reports = dnvol::reports_from_json(read_file(reports_path));
    if (reports.empty()) throw dnvol::InputError("empty-input: no reports in file");
    emit_panels("scatter", o, [&](dnvol::PanelFormat fmt) {
        return dnvol::emit_scatter(reports, {dnvol::PanelKind::scatter, "C_nd vs C_dn", fmt});
    });
    emit_panels("ratios", o, [&](dnvol::PanelFormat fmt) {
        return dnvol::emit_ratios(reports, {dnvol::PanelKind::ratio_bars, "C_nd/C_dn", fmt});
    });
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Intra-day vs overnight volatility asymmetry analyzer"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string input, manifest, reports_path;

    auto* analyze = app.add_subcommand("analyze", "Analyze one OHLC CSV file");
    analyze->add_option("--input", input, "OHLC CSV file")->required();
    add_common_flags(analyze, opts);

    auto* batch = app.add_subcommand("batch", "Analyze every file in a manifest");
    batch->add_option("--manifest", manifest, "Manifest: symbol,path[,group] per line")->required();
    add_common_flags(batch, opts);

    auto* synth = app.add_subcommand("synth", "Generate a synthetic CSV");
    std::string kind = "coupled";
    std::size_t n = 5000;
    double coupling = 1.0, rho = 0.0;
    std::uint64_t seed = 0;
    std::string synth_out = "synth.csv";
    synth->add_option("--kind", kind, "coupled, null or copula");
    synth->add_option("--n", n, "Number of trading days / pairs");
    synth->add_option("--coupling", coupling, "Night-to-day coupling strength (coupled)");
    synth->add_option("--rho", rho, "Latent Gaussian correlation (copula)");
    synth->add_option("--seed", seed, "RNG seed");
    synth->add_option("--out", synth_out, "Output CSV path");

    auto* report = app.add_subcommand("report", "Re-render panels from saved reports");
    report->add_option("--reports", reports_path, "reports.json from a batch run")->required();
    add_common_flags(report, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "error: config: " << e.what() << "\n";
        return 2;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(input, opts);
        if (batch->parsed()) return cmd_batch(manifest, opts);
        if (synth->parsed()) return cmd_synth(kind, n, coupling, rho, seed, synth_out);
        if (report->parsed()) return cmd_report(reports_path, opts);
    } catch (const dnvol::ConfigError& e) {
        std::cerr << "error: config: " << e.what() << "\n";
        return 2;
    } catch (const dnvol::DegenerateSampleError& e) {
        std::cerr << "error: degenerate: " << e.what() << "\n";
        return 3;
    } catch (const dnvol::InputError& e) {
        std::cerr << "error: input: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: input: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

// citemetrics: citation-index toolkit over researcher publication records.
//
// Subcommands:
//   compute  per-researcher index reports (h, g, e, h_x, h_q, renormalized)
//   cohort   cross-researcher table, rankings, rank comparison, curves
//   fit      power-law / proportional least squares over CSV columns
//   synth    seeded synthetic cohort generation
//
// Exit codes: 0 success, 1 data/validation error, 2 usage error.

#include "citemetrics/cohort.hpp"
#include "citemetrics/errors.hpp"
#include "citemetrics/fitting.hpp"
#include "citemetrics/io.hpp"
#include "citemetrics/report.hpp"
#include "citemetrics/synth.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace citemetrics;

namespace {

InputDataset load_dataset(const std::string& path, const std::string& format_name) {
    InputFormat format;
    if (format_name == "csv") format = InputFormat::Csv;
    else if (format_name == "jsonl") format = InputFormat::JsonLines;
    else throw ConfigError("unknown input format '" + format_name + "' (expected csv or jsonl)");

    if (path == "-") return parse_dataset(std::cin, format);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open input file '" + path + "'");
    return parse_dataset(in, format);
}

void write_output(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open output file '" + path + "'");
    out << content;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> parts;
    std::string current;
    std::istringstream in(text);
    while (std::getline(in, current, ',')) parts.push_back(current);
    return parts;
}

std::vector<Rational> parse_q_list(const std::string& text) {
    std::vector<Rational> qs;
    for (const auto& part : split_list(text)) {
        try {
            qs.push_back(parse_rational(part));
        } catch (const ParseError& e) {
            throw ConfigError(std::string("invalid q value: ") + e.what());
        }
    }
    return qs;
}

std::string json_text(const json& j) { return j.dump(2) + "\n"; }

// --- fit column selectors: name | sqrt(name) | a/b | sqrt(a/b) -------------

struct ColumnSelector {
    bool sqrt = false;
    std::string numerator;
    std::string denominator;  // empty for plain columns
};

ColumnSelector parse_selector(const std::string& text) {
    ColumnSelector sel;
    std::string body = text;
    if (body.starts_with("sqrt(") && body.ends_with(")")) {
        sel.sqrt = true;
        body = body.substr(5, body.size() - 6);
    }
    const auto slash = body.find('/');
    if (slash != std::string::npos) {
        sel.numerator = body.substr(0, slash);
        sel.denominator = body.substr(slash + 1);
        if (sel.denominator.empty()) throw ConfigError("invalid column selector '" + text + "'");
    } else {
        sel.numerator = body;
    }
    if (sel.numerator.empty()) throw ConfigError("invalid column selector '" + text + "'");
    return sel;
}

std::size_t column_index(const CsvTable& table, const std::string& name) {
    for (std::size_t i = 0; i < table.header.size(); ++i)
        if (table.header[i] == name) return i;
    std::string joined;
    for (const auto& h : table.header) {
        if (!joined.empty()) joined += ",";
        joined += h;
    }
    throw ConfigError("column '" + name + "' not found in input (header: " + joined + ")");
}

double parse_cell(const std::string& text, int row) {
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (text.empty() || end != text.c_str() + text.size())
        throw ParseError("row " + std::to_string(row) + ": cell '" + text + "' is not numeric");
    return v;
}

std::vector<PointXY> select_points(const CsvTable& table, const ColumnSelector& x,
                                   const ColumnSelector& y) {
    auto eval = [&](const ColumnSelector& sel, const std::vector<std::string>& row,
                    int row_no) -> double {
        double v = parse_cell(row[column_index(table, sel.numerator)], row_no);
        if (!sel.denominator.empty())
            v /= parse_cell(row[column_index(table, sel.denominator)], row_no);
        return sel.sqrt ? std::sqrt(v) : v;
    };
    std::vector<PointXY> points;
    points.reserve(table.rows.size());
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const int row_no = static_cast<int>(i) + 2;  // header is line 1
        points.push_back({eval(x, table.rows[i], row_no), eval(y, table.rows[i], row_no)});
    }
    return points;
}

// --- subcommands ------------------------------------------------------------

struct ComputeOptions {
    std::string input = "-";
    std::string input_format = "csv";
    std::string scheme = "raw";
    std::string q_list;
    std::string format = "json";
    std::string out = "-";
};

struct CohortOptions {
    std::string input = "-";
    std::string input_format = "csv";
    std::string metrics;
    std::string rank_by_metric;
    std::string compare;
    std::string excess_q;
    bool emit_curves = false;
    bool no_summary = false;
    std::string format = "json";
    std::string out = "-";
};

struct FitOptions {
    std::string input = "-";
    std::string model = "power";
    std::string x;
    std::string y;
    std::string format = "json";
    std::string out = "-";
};

struct SynthOptions {
    std::string spec_path;
    std::int64_t seed = -1;
    std::string out = "-";
};

int run_compute(const ComputeOptions& opt) {
    const auto dataset = load_dataset(opt.input, opt.input_format);
    const auto researchers = group_by_researcher(dataset);
    const CreditScheme scheme = credit_scheme_from_string(opt.scheme);
    const auto qs = opt.q_list.empty() ? std::vector<Rational>{} : parse_q_list(opt.q_list);

    std::vector<IndexReport> reports;
    reports.reserve(researchers.size());
    for (const auto& input : researchers)
        reports.push_back(build_index_report(input, scheme, qs));

    if (opt.format == "csv") {
        write_output(opt.out, reports_to_csv(reports));
    } else if (opt.format == "json") {
        json j = json::array();
        for (const auto& report : reports) j.push_back(report_to_json(report));
        write_output(opt.out, json_text(j));
    } else {
        throw ConfigError("unknown output format '" + opt.format + "'");
    }
    return 0;
}

int run_cohort(const CohortOptions& opt) {
    const auto dataset = load_dataset(opt.input, opt.input_format);
    const auto researchers = group_by_researcher(dataset);

    std::vector<std::string> metrics;
    if (opt.metrics.empty())
        metrics.assign(known_metrics().begin(), known_metrics().end());
    else
        metrics = split_list(opt.metrics);

    const auto table = build_cohort_table(researchers, metrics);

    std::optional<Ranking> ranking;
    if (!opt.rank_by_metric.empty()) ranking = rank_by(table, opt.rank_by_metric);

    std::optional<std::pair<std::string, std::string>> compare;
    std::vector<RankShiftEntry> shifts;
    double tau = 0.0;
    if (!opt.compare.empty()) {
        const auto parts = split_list(opt.compare);
        if (parts.size() != 2)
            throw ConfigError("--compare expects two metric names, e.g. h,h_pi");
        const auto by_a = rank_by(table, parts[0]);
        const auto by_b = rank_by(table, parts[1]);
        shifts = rank_shift(by_a, by_b);
        tau = rank_correlation(by_a, by_b);
        compare = {parts[0], parts[1]};
    }

    std::optional<ExcessReport> excess;
    if (!opt.excess_q.empty()) {
        std::vector<ResearcherRecord> records;
        records.reserve(researchers.size());
        for (const auto& input : researchers) records.push_back(input.record);
        excess = excess_comparison(records, parse_q_list(opt.excess_q));
    }

    if (opt.format == "json") {
        json j;
        json table_json = table_to_json(table);
        if (opt.no_summary) table_json.erase("summary");
        j["table"] = std::move(table_json);
        if (ranking) j["ranking"] = ranking_to_json(*ranking);
        if (compare) {
            json c = rank_shift_to_json(shifts, compare->first, compare->second);
            c["kendall_tau_b"] = tau;
            j["compare"] = std::move(c);
        }
        if (excess) j["excess"] = excess_to_json(*excess);
        if (opt.emit_curves) j["curves"] = curves_to_json(researchers);
        write_output(opt.out, json_text(j));
    } else if (opt.format == "csv") {
        std::string out;
        if (opt.no_summary) {
            CohortTable bare = table;
            bare.summary.clear();
            out = table_to_csv(bare);
        } else {
            out = table_to_csv(table);
        }
        if (ranking) {
            out += "\n# ranking by " + ranking->metric + "\n";
            out += ranking_to_csv(*ranking);
        }
        if (compare) {
            out += "\n# rank shift " + compare->first + " -> " + compare->second + "\n";
            out += rank_shift_to_csv(shifts);
            out += "kendall_tau_b," + format_sig6(tau) + "\n";
        }
        if (excess) {
            out += "\n# excess comparison\n";
            out += excess_to_csv(*excess);
        }
        if (opt.emit_curves) {
            out += "\n# citation curves\n";
            out += curves_to_csv(researchers);
        }
        write_output(opt.out, out);
    } else {
        throw ConfigError("unknown output format '" + opt.format + "'");
    }
    return 0;
}

int run_fit(const FitOptions& opt) {
    if (opt.x.empty() || opt.y.empty()) throw ConfigError("--x and --y are required");

    CsvTable table;
    if (opt.input == "-") {
        table = parse_csv_table(std::cin);
    } else {
        std::ifstream in(opt.input, std::ios::binary);
        if (!in) throw ConfigError("cannot open input file '" + opt.input + "'");
        table = parse_csv_table(in);
    }

    const auto points = select_points(table, parse_selector(opt.x), parse_selector(opt.y));

    FitResult fit;
    if (opt.model == "power") fit = fit_power_law(points);
    else if (opt.model == "proportional") fit = fit_proportional(points);
    else throw ConfigError("unknown model '" + opt.model + "' (expected power or proportional)");

    if (opt.format == "csv") write_output(opt.out, fit_to_csv(fit));
    else if (opt.format == "json") write_output(opt.out, json_text(fit_to_json(fit)));
    else throw ConfigError("unknown output format '" + opt.format + "'");
    return 0;
}

int run_synth(const SynthOptions& opt) {
    std::ifstream in(opt.spec_path, std::ios::binary);
    if (!in) throw ConfigError("cannot open spec file '" + opt.spec_path + "'");
    json spec_json;
    try {
        in >> spec_json;
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("invalid spec JSON: ") + e.what());
    }
    SyntheticCohortSpec spec = spec_from_json(spec_json);
    if (opt.seed >= 0) spec.seed = static_cast<std::uint64_t>(opt.seed);

    const auto cohort = generate_synthetic_cohort(spec);
    write_output(opt.out, emit_dataset_csv(dataset_from_records(cohort)));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"citation index toolkit: h-family indices, fractional credit, "
                 "cohort rankings, scaling-law fits"};
    app.require_subcommand(1);

    ComputeOptions compute_opt;
    auto* compute = app.add_subcommand("compute", "per-researcher index reports");
    compute->add_option("--input", compute_opt.input, "dataset path or - for stdin");
    compute->add_option("--input-format", compute_opt.input_format, "csv or jsonl");
    compute->add_option("--scheme", compute_opt.scheme, "credit scheme: raw, pi, or author");
    compute->add_option("--q", compute_opt.q_list, "comma-separated h_q thresholds, e.g. 1/2,1,2");
    compute->add_option("--format", compute_opt.format, "output format: json or csv");
    compute->add_option("--out", compute_opt.out, "output path or - for stdout");

    CohortOptions cohort_opt;
    auto* cohort = app.add_subcommand("cohort", "cross-researcher table and rankings");
    cohort->add_option("--input", cohort_opt.input, "dataset path or - for stdin");
    cohort->add_option("--input-format", cohort_opt.input_format, "csv or jsonl");
    cohort->add_option("--metrics", cohort_opt.metrics,
                       "comma-separated metric list (default: all)");
    cohort->add_option("--rank-by", cohort_opt.rank_by_metric, "emit a ranking by this metric");
    cohort->add_option("--compare", cohort_opt.compare,
                       "two metrics to compare rankings, e.g. h,h_pi");
    cohort->add_option("--excess", cohort_opt.excess_q,
                       "emit the excess-citation report for these q values");
    cohort->add_flag("--emit-curves", cohort_opt.emit_curves,
                     "emit per-researcher (rank, value) series");
    cohort->add_flag("--no-summary", cohort_opt.no_summary, "omit the min/max summary rows");
    cohort->add_option("--format", cohort_opt.format, "output format: json or csv");
    cohort->add_option("--out", cohort_opt.out, "output path or - for stdout");

    FitOptions fit_opt;
    auto* fit = app.add_subcommand("fit", "least-squares fit over CSV columns");
    fit->add_option("--input", fit_opt.input, "CSV path or - for stdin");
    fit->add_option("--model", fit_opt.model, "power or proportional");
    fit->add_option("--x", fit_opt.x, "x selector: col, sqrt(col), a/b, sqrt(a/b)");
    fit->add_option("--y", fit_opt.y, "y selector: col, sqrt(col), a/b, sqrt(a/b)");
    fit->add_option("--format", fit_opt.format, "output format: json or csv");
    fit->add_option("--out", fit_opt.out, "output path or - for stdout");

    SynthOptions synth_opt;
    auto* synth = app.add_subcommand("synth", "generate a seeded synthetic cohort");
    synth->add_option("--spec", synth_opt.spec_path, "JSON spec file")->required();
    synth->add_option("--seed", synth_opt.seed, "override the spec's seed")
        ->check(CLI::NonNegativeNumber);
    synth->add_option("--out", synth_opt.out, "output path or - for stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(compute)) return run_compute(compute_opt);
        if (app.got_subcommand(cohort)) return run_cohort(cohort_opt);
        if (app.got_subcommand(fit)) return run_fit(fit_opt);
        if (app.got_subcommand(synth)) return run_synth(synth_opt);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

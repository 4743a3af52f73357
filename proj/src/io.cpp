#include "citemetrics/io.hpp"

#include "citemetrics/errors.hpp"
#include "citemetrics/profile.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <istream>
#include <limits>
#include <map>
#include <sstream>

namespace citemetrics {

namespace {

constexpr const char* kDatasetHeader = "researcher_id,paper_id,citations,n_authors,n_pi";

std::string at_line(int line) { return "line " + std::to_string(line) + ": "; }

std::vector<std::string> split_csv_line(const std::string& line, int line_no) {
    std::vector<std::string> fields;
    std::string current;
    bool in_quotes = false;
    bool was_quoted = false;

    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    current += '"';
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                current += c;
            }
        } else if (c == '"') {
            if (!current.empty() || was_quoted)
                throw ParseError(at_line(line_no) + "unexpected quote inside unquoted field");
            in_quotes = true;
            was_quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(current));
            current.clear();
            was_quoted = false;
        } else {
            if (was_quoted)
                throw ParseError(at_line(line_no) + "text after closing quote");
            current += c;
        }
    }
    if (in_quotes) throw ParseError(at_line(line_no) + "unterminated quoted field");
    fields.push_back(std::move(current));
    return fields;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

std::int64_t parse_int64_field(const std::string& text, int line, const char* what) {
    std::int64_t value = 0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || text.empty())
        throw ParseError(at_line(line) + std::string(what) + " is not an integer: '" + text + "'");
    return value;
}

int parse_int_field(const std::string& text, int line, const char* what) {
    const std::int64_t v = parse_int64_field(text, line, what);
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
        throw ParseError(at_line(line) + std::string(what) + " is out of range: '" + text + "'");
    return static_cast<int>(v);
}

void check_identifier(const std::string& id, int line, const char* what) {
    if (id.empty())
        throw ValidationError(at_line(line) + std::string(what) + " must not be empty");
    if (id.find_first_of("\n\r") != std::string::npos)
        throw ValidationError(at_line(line) + std::string(what) + " must not contain line breaks");
}

void validate_dataset(const InputDataset& dataset) {
    std::map<std::pair<std::string, std::string>, int> seen;
    for (const auto& row : dataset.rows) {
        check_identifier(row.researcher_id, row.line, "researcher_id");
        check_identifier(row.paper_id, row.line, "paper_id");
        const std::string where = at_line(row.line) + "researcher '" + row.researcher_id +
                                  "', paper '" + row.paper_id + "': ";
        if (row.citations < 0) throw ValidationError(where + "citations must be non-negative");
        if (row.n_authors < 1) throw ValidationError(where + "n_authors must be at least 1");
        if (row.n_pi) {
            if (*row.n_pi < 1) throw ValidationError(where + "n_pi must be at least 1");
            if (*row.n_pi > row.n_authors)
                throw ValidationError(where + "n_pi exceeds n_authors");
        }
        const auto [it, inserted] =
            seen.emplace(std::make_pair(row.researcher_id, row.paper_id), row.line);
        if (!inserted)
            throw ValidationError("duplicate key (researcher '" + row.researcher_id +
                                  "', paper '" + row.paper_id + "') at lines " +
                                  std::to_string(it->second) + " and " +
                                  std::to_string(row.line));
    }
}

InputDataset parse_csv(std::istream& in) {
    InputDataset dataset;
    std::string line;
    int line_no = 0;
    bool saw_header = false;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!saw_header) {
            if (line != kDatasetHeader)
                throw ParseError(at_line(line_no) + "expected header '" +
                                 std::string(kDatasetHeader) + "'");
            saw_header = true;
            continue;
        }
        auto fields = split_csv_line(line, line_no);
        if (fields.size() != 5)
            throw ParseError(at_line(line_no) + "expected 5 fields, got " +
                             std::to_string(fields.size()));

        InputRow row;
        row.line = line_no;
        row.researcher_id = std::move(fields[0]);
        row.paper_id = std::move(fields[1]);
        row.citations = parse_int64_field(fields[2], line_no, "citations");
        row.n_authors = parse_int_field(fields[3], line_no, "n_authors");
        if (!fields[4].empty()) row.n_pi = parse_int_field(fields[4], line_no, "n_pi");
        dataset.rows.push_back(std::move(row));
    }
    if (!saw_header) throw ParseError("line 1: empty input, expected header");
    validate_dataset(dataset);
    return dataset;
}

InputDataset parse_json_lines(std::istream& in) {
    InputDataset dataset;
    std::string line;
    int line_no = 0;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;

        json j;
        try {
            j = json::parse(line);
        } catch (const json::parse_error& e) {
            throw ParseError(at_line(line_no) + e.what());
        }
        if (!j.is_object()) throw ParseError(at_line(line_no) + "expected a JSON object");

        InputRow row;
        row.line = line_no;
        try {
            row.researcher_id = j.at("researcher_id").get<std::string>();
            row.paper_id = j.at("paper_id").get<std::string>();
            if (!j.at("citations").is_number_integer())
                throw ParseError(at_line(line_no) + "citations must be an integer");
            row.citations = j.at("citations").get<std::int64_t>();
            if (!j.at("n_authors").is_number_integer())
                throw ParseError(at_line(line_no) + "n_authors must be an integer");
            row.n_authors = j.at("n_authors").get<int>();
            if (j.contains("n_pi") && !j.at("n_pi").is_null()) {
                if (!j.at("n_pi").is_number_integer())
                    throw ParseError(at_line(line_no) + "n_pi must be an integer or null");
                row.n_pi = j.at("n_pi").get<int>();
            }
        } catch (const json::exception& e) {
            throw ParseError(at_line(line_no) + e.what());
        }
        dataset.rows.push_back(std::move(row));
    }
    validate_dataset(dataset);
    return dataset;
}

}  // namespace

InputDataset parse_dataset(std::istream& in, InputFormat format) {
    return format == InputFormat::Csv ? parse_csv(in) : parse_json_lines(in);
}

std::vector<ResearcherInput> group_by_researcher(const InputDataset& dataset) {
    std::map<std::string, ResearcherInput> grouped;
    for (const auto& row : dataset.rows) {
        auto& input = grouped[row.researcher_id];
        if (input.record.papers.empty()) input.record.researcher_id = row.researcher_id;
        PaperRecord paper;
        paper.paper_id = row.paper_id;
        paper.citations = row.citations;
        paper.n_authors = row.n_authors;
        paper.n_pi = row.n_pi.value_or(1);  // placeholder when unknown
        input.record.papers.push_back(std::move(paper));
        if (!row.n_pi) input.n_pi_known = false;
    }

    std::vector<ResearcherInput> out;
    out.reserve(grouped.size());
    for (auto& [id, input] : grouped) {
        (void)id;
        out.push_back(std::move(input));
    }
    return out;
}

InputDataset dataset_from_records(std::span<const ResearcherRecord> records) {
    InputDataset dataset;
    for (const auto& record : records) {
        for (const auto& paper : record.papers) {
            InputRow row;
            row.researcher_id = record.researcher_id;
            row.paper_id = paper.paper_id;
            row.citations = paper.citations;
            row.n_authors = paper.n_authors;
            row.n_pi = paper.n_pi;
            dataset.rows.push_back(std::move(row));
        }
    }
    return dataset;
}

std::string emit_dataset_csv(const InputDataset& dataset) {
    std::string out = kDatasetHeader;
    out += '\n';
    for (const auto& row : dataset.rows) {
        check_identifier(row.researcher_id, row.line, "researcher_id");
        check_identifier(row.paper_id, row.line, "paper_id");
        out += csv_escape(row.researcher_id);
        out += ',';
        out += csv_escape(row.paper_id);
        out += ',';
        out += std::to_string(row.citations);
        out += ',';
        out += std::to_string(row.n_authors);
        out += ',';
        if (row.n_pi) out += std::to_string(*row.n_pi);
        out += '\n';
    }
    return out;
}

std::string format_sig6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

namespace {

json bigint_to_json(const BigInt& v) {
    static const BigInt kMin = std::numeric_limits<std::int64_t>::min();
    static const BigInt kMax = std::numeric_limits<std::int64_t>::max();
    if (v >= kMin && v <= kMax) return v.convert_to<std::int64_t>();
    return v.str();
}

std::string rational_to_csv_cell(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return format_sig6(to_double(r));
}

std::string metric_value_to_csv_cell(const MetricValue& v) {
    if (v.exact) return rational_to_csv_cell(*v.exact);
    return format_sig6(v.value);
}

json metric_value_to_json(const MetricValue& v) {
    if (!v.exact) return v.value;
    if (denominator(*v.exact) == 1) return bigint_to_json(numerator(*v.exact));
    return rational_to_json(*v.exact);
}

}  // namespace

json rational_to_json(const Rational& r) {
    json j;
    j["value"] = to_double(r);
    j["num"] = bigint_to_json(numerator(r));
    j["den"] = bigint_to_json(denominator(r));
    return j;
}

json report_to_json(const IndexReport& report) {
    json j;
    j["researcher_id"] = report.researcher_id;
    j["scheme"] = to_string(report.scheme);
    j["n_papers"] = report.n_papers;
    j["h"] = report.core.h;
    j["c_h"] = rational_to_json(report.core.c_h);
    j["c_hx"] = rational_to_json(report.core.c_hx);
    j["e"] = report.core.e;
    j["h_x"] = rational_to_json(report.core.h_x);
    j["g"] = report.core.g;
    j["c_tot"] = rational_to_json(report.c_tot);

    json hq = json::array();
    for (const auto& [q, value] : report.h_q) {
        json item;
        item["q"] = rational_to_string(q);
        item["h_q"] = value;
        hq.push_back(std::move(item));
    }
    j["h_q"] = std::move(hq);

    if (report.renorm) {
        const auto& r = *report.renorm;
        json rn;
        rn["h"] = r.h;
        rn["h_pi"] = r.h_pi;
        rn["h_a"] = r.h_a;
        rn["mean_n_pi"] = rational_to_json(r.mean_n_pi);
        rn["mean_n_a"] = rational_to_json(r.mean_n_a);
        rn["c_tot"] = rational_to_json(r.c_tot);
        rn["predicted_h_pi"] = report.predicted_h_pi ? json(*report.predicted_h_pi) : json();
        rn["n_pi_estimated"] = r.n_pi_estimated;
        j["renorm"] = std::move(rn);
    } else {
        j["renorm"] = nullptr;
    }
    return j;
}

std::string reports_to_csv(std::span<const IndexReport> reports) {
    std::string out =
        "researcher_id,scheme,n_papers,h,g,c_tot,c_h,c_hx,e,h_x,"
        "h_pi,h_a,mean_n_pi,mean_n_a,predicted_h_pi,n_pi_estimated";
    if (!reports.empty()) {
        for (const auto& [q, value] : reports.front().h_q) {
            (void)value;
            out += ",h_q_" + rational_to_string(q);
        }
    }
    out += '\n';

    for (const auto& report : reports) {
        out += csv_escape(report.researcher_id);
        out += ',';
        out += to_string(report.scheme);
        out += ',';
        out += std::to_string(report.n_papers);
        out += ',';
        out += std::to_string(report.core.h);
        out += ',';
        out += std::to_string(report.core.g);
        out += ',';
        out += rational_to_csv_cell(report.c_tot);
        out += ',';
        out += rational_to_csv_cell(report.core.c_h);
        out += ',';
        out += rational_to_csv_cell(report.core.c_hx);
        out += ',';
        out += format_sig6(report.core.e);
        out += ',';
        out += rational_to_csv_cell(report.core.h_x);
        out += ',';
        if (report.renorm) {
            const auto& r = *report.renorm;
            out += std::to_string(r.h_pi);
            out += ',';
            out += std::to_string(r.h_a);
            out += ',';
            out += rational_to_csv_cell(r.mean_n_pi);
            out += ',';
            out += rational_to_csv_cell(r.mean_n_a);
            out += ',';
            out += report.predicted_h_pi ? format_sig6(*report.predicted_h_pi) : std::string();
            out += ',';
            out += r.n_pi_estimated ? "1" : "0";
        } else {
            out += ",,,,,";
        }
        for (const auto& [q, value] : report.h_q) {
            (void)q;
            out += ',';
            out += std::to_string(value);
        }
        out += '\n';
    }
    return out;
}

json table_to_json(const CohortTable& table) {
    json j;
    j["metrics"] = table.metrics;

    json rows = json::array();
    for (const auto& row : table.rows) {
        json r;
        r["researcher_id"] = row.researcher_id;
        json values;
        for (std::size_t m = 0; m < table.metrics.size(); ++m)
            values[table.metrics[m]] = metric_value_to_json(row.values[m]);
        r["values"] = std::move(values);
        r["n_pi_estimated"] = row.n_pi_estimated;
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);

    json summary;
    for (std::size_t m = 0; m < table.summary.size(); ++m) {
        json s;
        s["min"] = metric_value_to_json(table.summary[m].min);
        s["max"] = metric_value_to_json(table.summary[m].max);
        summary[table.metrics[m]] = std::move(s);
    }
    j["summary"] = std::move(summary);
    return j;
}

std::string table_to_csv(const CohortTable& table) {
    std::string out = "researcher_id";
    for (const auto& name : table.metrics) out += ',' + name;
    out += ",n_pi_estimated\n";

    for (const auto& row : table.rows) {
        out += csv_escape(row.researcher_id);
        for (const auto& value : row.values) {
            out += ',';
            out += metric_value_to_csv_cell(value);
        }
        out += ',';
        out += row.n_pi_estimated ? "1" : "0";
        out += '\n';
    }
    if (!table.summary.empty()) {
        out += "min";
        for (const auto& s : table.summary) {
            out += ',';
            out += metric_value_to_csv_cell(s.min);
        }
        out += ",\n";
        out += "max";
        for (const auto& s : table.summary) {
            out += ',';
            out += metric_value_to_csv_cell(s.max);
        }
        out += ",\n";
    }
    return out;
}

json ranking_to_json(const Ranking& ranking) {
    json j;
    j["metric"] = ranking.metric;
    json order = json::array();
    for (const auto& entry : ranking.order) {
        json e;
        e["rank"] = entry.rank;
        e["researcher_id"] = entry.researcher_id;
        e["value"] = metric_value_to_json(entry.value);
        order.push_back(std::move(e));
    }
    j["order"] = std::move(order);
    return j;
}

std::string ranking_to_csv(const Ranking& ranking) {
    std::string out = "rank,researcher_id," + ranking.metric + "\n";
    for (const auto& entry : ranking.order) {
        out += std::to_string(entry.rank);
        out += ',';
        out += csv_escape(entry.researcher_id);
        out += ',';
        out += metric_value_to_csv_cell(entry.value);
        out += '\n';
    }
    return out;
}

json rank_shift_to_json(std::span<const RankShiftEntry> shifts,
                        const std::string& metric_a, const std::string& metric_b) {
    json j;
    j["metric_a"] = metric_a;
    j["metric_b"] = metric_b;
    json rows = json::array();
    for (const auto& entry : shifts) {
        json e;
        e["researcher_id"] = entry.researcher_id;
        e["rank_a"] = entry.rank_a;
        e["rank_b"] = entry.rank_b;
        e["shift"] = entry.shift;
        rows.push_back(std::move(e));
    }
    j["shifts"] = std::move(rows);
    return j;
}

std::string rank_shift_to_csv(std::span<const RankShiftEntry> shifts) {
    std::string out = "researcher_id,rank_a,rank_b,shift\n";
    for (const auto& entry : shifts) {
        out += csv_escape(entry.researcher_id);
        out += ',';
        out += std::to_string(entry.rank_a);
        out += ',';
        out += std::to_string(entry.rank_b);
        out += ',';
        out += std::to_string(entry.shift);
        out += '\n';
    }
    return out;
}

json fit_to_json(const FitResult& fit) {
    json j;
    j["model"] = to_string(fit.model);
    if (fit.model == FitModel::PowerLaw) {
        j["a"] = fit.a;
        j["b"] = fit.b;
        j["r_squared_definition"] = "centered_log_space";
    } else {
        j["s"] = fit.s;
        j["r_squared_definition"] = "uncentered";
    }
    j["n_points"] = fit.n_points;
    j["rms_residual"] = fit.rms_residual;
    j["r_squared"] = fit.r_squared;
    return j;
}

std::string fit_to_csv(const FitResult& fit) {
    std::string out = "model,a,b,s,n_points,rms_residual,r_squared\n";
    out += to_string(fit.model);
    out += ',';
    if (fit.model == FitModel::PowerLaw) {
        out += format_sig6(fit.a);
        out += ',';
        out += format_sig6(fit.b);
        out += ",,";
    } else {
        out += ",,";
        out += format_sig6(fit.s);
        out += ',';
    }
    out += std::to_string(fit.n_points);
    out += ',';
    out += format_sig6(fit.rms_residual);
    out += ',';
    out += format_sig6(fit.r_squared);
    out += '\n';
    return out;
}

json excess_to_json(const ExcessReport& report) {
    json j;
    json qs = json::array();
    for (const auto& q : report.q_values) qs.push_back(rational_to_string(q));
    j["q_values"] = std::move(qs);

    json rows = json::array();
    for (const auto& row : report.rows) {
        json r;
        r["researcher_id"] = row.researcher_id;
        json hq;
        for (std::size_t i = 0; i < report.q_values.size(); ++i)
            hq[rational_to_string(report.q_values[i])] = row.h_q[i];
        r["h_q"] = std::move(hq);
        r["e"] = row.e;
        r["h_x"] = rational_to_json(row.h_x);
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j;
}

std::string excess_to_csv(const ExcessReport& report) {
    std::string out = "researcher_id";
    for (const auto& q : report.q_values) out += ",h_q_" + rational_to_string(q);
    out += ",e,h_x\n";
    for (const auto& row : report.rows) {
        out += csv_escape(row.researcher_id);
        for (int value : row.h_q) {
            out += ',';
            out += std::to_string(value);
        }
        out += ',';
        out += format_sig6(row.e);
        out += ',';
        out += rational_to_csv_cell(row.h_x);
        out += '\n';
    }
    return out;
}

json curves_to_json(std::span<const ResearcherInput> researchers) {
    json j;
    std::vector<const ResearcherInput*> sorted;
    sorted.reserve(researchers.size());
    for (const auto& r : researchers) sorted.push_back(&r);
    std::sort(sorted.begin(), sorted.end(), [](const ResearcherInput* a, const ResearcherInput* b) {
        return a->record.researcher_id < b->record.researcher_id;
    });
    for (const ResearcherInput* input : sorted) {
        const CitationProfile profile = build_profile(input->record, CreditScheme::Raw);
        json series = json::array();
        for (const auto& entry : profile.entries)
            series.push_back(json::array({entry.rank, to_double(entry.value)}));
        j[input->record.researcher_id] = std::move(series);
    }
    return j;
}

std::string curves_to_csv(std::span<const ResearcherInput> researchers) {
    std::vector<const ResearcherInput*> sorted;
    sorted.reserve(researchers.size());
    for (const auto& r : researchers) sorted.push_back(&r);
    std::sort(sorted.begin(), sorted.end(), [](const ResearcherInput* a, const ResearcherInput* b) {
        return a->record.researcher_id < b->record.researcher_id;
    });

    std::string out = "researcher_id,rank,value\n";
    for (const ResearcherInput* input : sorted) {
        const CitationProfile profile = build_profile(input->record, CreditScheme::Raw);
        for (const auto& entry : profile.entries) {
            out += csv_escape(input->record.researcher_id);
            out += ',';
            out += std::to_string(entry.rank);
            out += ',';
            out += rational_to_csv_cell(entry.value);
            out += '\n';
        }
    }
    return out;
}

namespace {

IntRange range_from_json(const json& j, const std::string& key) {
    if (!j.contains(key)) throw ConfigError("synthetic spec is missing '" + key + "'");
    const auto& v = j.at(key);
    if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer())
        throw ConfigError("synthetic spec '" + key + "' must be an integer pair [lo, hi]");
    return IntRange{v[0].get<int>(), v[1].get<int>()};
}

}  // namespace

CsvTable parse_csv_table(std::istream& in) {
    CsvTable table;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) {
            if (table.header.empty()) continue;
            break;  // section separator
        }
        auto fields = split_csv_line(line, line_no);
        if (table.header.empty()) {
            table.header = std::move(fields);
        } else {
            if (fields.size() != table.header.size())
                throw ParseError(at_line(line_no) + "expected " +
                                 std::to_string(table.header.size()) + " fields, got " +
                                 std::to_string(fields.size()));
            table.rows.push_back(std::move(fields));
        }
    }
    if (table.header.empty()) throw ParseError("line 1: empty input, expected a CSV header");
    return table;
}

SyntheticCohortSpec spec_from_json(const json& j) {
    if (!j.is_object()) throw ConfigError("synthetic spec must be a JSON object");

    SyntheticCohortSpec spec;
    if (!j.contains("n_researchers") || !j.at("n_researchers").is_number_integer())
        throw ConfigError("synthetic spec needs an integer 'n_researchers'");
    spec.n_researchers = j.at("n_researchers").get<int>();
    spec.papers_per_researcher = range_from_json(j, "papers_per_researcher");
    spec.n_pi_range = range_from_json(j, "n_pi");
    if (j.contains("extra_authors")) spec.extra_authors = range_from_json(j, "extra_authors");

    if (!j.contains("citations") || !j.at("citations").is_object())
        throw ConfigError("synthetic spec needs a 'citations' object");
    const auto& cit = j.at("citations");
    const std::string model = cit.value("model", "");
    if (model == "geometric") {
        spec.citation_model = CitationModel::Geometric;
        if (!cit.contains("mean") || !cit.at("mean").is_number())
            throw ConfigError("geometric citation model needs a numeric 'mean'");
        spec.citation_param = cit.at("mean").get<double>();
    } else if (model == "power_law") {
        spec.citation_model = CitationModel::PowerLawTail;
        if (!cit.contains("exponent") || !cit.at("exponent").is_number())
            throw ConfigError("power-law citation model needs a numeric 'exponent'");
        spec.citation_param = cit.at("exponent").get<double>();
    } else {
        throw ConfigError("citation model must be 'geometric' or 'power_law'");
    }

    if (j.contains("noise_sigma")) {
        if (!j.at("noise_sigma").is_number())
            throw ConfigError("'noise_sigma' must be numeric");
        spec.noise_sigma = j.at("noise_sigma").get<double>();
    }
    if (j.contains("seed")) {
        if (!j.at("seed").is_number_integer())
            throw ConfigError("'seed' must be an integer");
        spec.seed = j.at("seed").get<std::uint64_t>();
    }
    validate(spec);
    return spec;
}

}  // namespace citemetrics

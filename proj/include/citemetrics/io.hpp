#pragma once

#include "citemetrics/cohort.hpp"
#include "citemetrics/fitting.hpp"
#include "citemetrics/records.hpp"
#include "citemetrics/report.hpp"
#include "citemetrics/synth.hpp"

#include "json.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace citemetrics {

using json = nlohmann::ordered_json;

enum class InputFormat { Csv, JsonLines };

/// One dataset row:
/// researcher_id,paper_id,citations,n_authors,n_pi -- n_pi may be empty,
/// which marks the researcher for the mean-authors fallback estimate.
struct InputRow {
    std::string researcher_id;
    std::string paper_id;
    std::int64_t citations = 0;
    int n_authors = 1;
    std::optional<int> n_pi;
    int line = 0;  // source line, for diagnostics only

    friend bool operator==(const InputRow& a, const InputRow& b) {
        return a.researcher_id == b.researcher_id && a.paper_id == b.paper_id &&
               a.citations == b.citations && a.n_authors == b.n_authors && a.n_pi == b.n_pi;
    }
};

struct InputDataset {
    std::vector<InputRow> rows;  // source order preserved

    friend bool operator==(const InputDataset& a, const InputDataset& b) {
        return a.rows == b.rows;
    }
};

/// Parses and validates a dataset. CSV requires the exact header
/// `researcher_id,paper_id,citations,n_authors,n_pi`; JSON-lines takes one
/// object per line with the same fields (n_pi absent or null when unknown).
/// Malformed rows raise ParseError with the line number; invariant
/// violations and duplicate (researcher_id, paper_id) keys raise
/// ValidationError naming the ids.
InputDataset parse_dataset(std::istream& in, InputFormat format);

/// Groups rows into per-researcher records, sorted by researcher_id.
/// A researcher with any missing n_pi is returned with n_pi_known = false
/// and placeholder PI counts of 1.
std::vector<ResearcherInput> group_by_researcher(const InputDataset& dataset);

/// Records generated in-process (n_pi always known) as a dataset.
InputDataset dataset_from_records(std::span<const ResearcherRecord> records);

// --- serialization ------------------------------------------------------
//
// All emitters are byte-deterministic for identical inputs. CSV uses LF
// line endings, minimal RFC 4180 quoting, and fixed column orders; numeric
// cells use up to 6 significant digits. JSON carries rationals as
// {"value": <decimal>, "num": <numerator>, "den": <denominator>}.

std::string emit_dataset_csv(const InputDataset& dataset);

std::string format_sig6(double v);
json rational_to_json(const Rational& r);

json report_to_json(const IndexReport& report);
std::string reports_to_csv(std::span<const IndexReport> reports);

json table_to_json(const CohortTable& table);
std::string table_to_csv(const CohortTable& table);

json ranking_to_json(const Ranking& ranking);
std::string ranking_to_csv(const Ranking& ranking);

json rank_shift_to_json(std::span<const RankShiftEntry> shifts,
                        const std::string& metric_a, const std::string& metric_b);
std::string rank_shift_to_csv(std::span<const RankShiftEntry> shifts);

json fit_to_json(const FitResult& fit);
std::string fit_to_csv(const FitResult& fit);

json excess_to_json(const ExcessReport& report);
std::string excess_to_csv(const ExcessReport& report);

/// Raw C(r) series for external plotting, keyed by researcher_id.
json curves_to_json(std::span<const ResearcherInput> researchers);
std::string curves_to_csv(std::span<const ResearcherInput> researchers);

/// Synthetic-cohort spec from its JSON form (see README for the schema).
SyntheticCohortSpec spec_from_json(const json& j);

/// A generic CSV table with a header row, for column-selected fitting.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;  // each sized like header
};

/// Stops at the first blank line (section separator). Raises ParseError on
/// ragged rows.
CsvTable parse_csv_table(std::istream& in);

}  // namespace citemetrics

#pragma once

#include "citemetrics/rational.hpp"
#include "citemetrics/records.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace citemetrics {

/// One table cell. `value` is always usable for display; `exact` is present
/// for integer- and rational-valued metrics so comparisons and summaries
/// never depend on floating point.
struct MetricValue {
    double value = 0.0;
    std::optional<Rational> exact;
};

bool metric_less(const MetricValue& a, const MetricValue& b);
bool metric_equal(const MetricValue& a, const MetricValue& b);

struct CohortRow {
    std::string researcher_id;
    std::vector<MetricValue> values;  // one per table metric
    bool n_pi_estimated = false;
};

struct MetricSummary {
    MetricValue min;
    MetricValue max;
};

/// Per-researcher metric matrix. Rows are sorted by researcher_id so the
/// table is independent of input order; summary holds min/max per metric
/// and is empty for an empty cohort.
struct CohortTable {
    std::vector<std::string> metrics;
    std::vector<CohortRow> rows;
    std::vector<MetricSummary> summary;
};

struct RankedEntry {
    int rank = 0;  // competition ranking: 1, 2, 2, 4
    std::string researcher_id;
    MetricValue value;
};

struct Ranking {
    std::string metric;
    std::vector<RankedEntry> order;  // value descending, researcher_id ascending
};

struct RankShiftEntry {
    std::string researcher_id;
    int rank_a = 0;
    int rank_b = 0;
    int shift = 0;  // rank_b - rank_a
};

/// Metric names accepted by build_cohort_table.
std::span<const std::string> known_metrics();

/// Computes the requested metrics for every researcher. Unknown metric
/// names raise ConfigError; duplicate researcher ids raise ValidationError;
/// an empty cohort yields an empty table with no summary.
CohortTable build_cohort_table(std::span<const ResearcherInput> researchers,
                               const std::vector<std::string>& metrics);
CohortTable build_cohort_table(std::span<const ResearcherRecord> records,
                               const std::vector<std::string>& metrics);

/// Competition ranking (ties share a rank, next rank is skipped) of one
/// table column. Throws ConfigError if the metric is not in the table.
Ranking rank_by(const CohortTable& table, const std::string& metric);

/// Per-researcher rank movement between two rankings over the same
/// researcher set, sorted by rank in `by_a`. Throws ComparisonError on
/// mismatched sets.
std::vector<RankShiftEntry> rank_shift(const Ranking& by_a, const Ranking& by_b);

/// Kendall tau-b (tie-corrected) between two rankings over the same set.
double rank_correlation(const Ranking& by_a, const Ranking& by_b);

struct ExcessRow {
    std::string researcher_id;
    std::vector<int> h_q;  // parallel to the report's q_values
    double e = 0.0;
    Rational h_x;
};

/// Per-researcher h_q spectrum plus the excess-citation indicators e and
/// h_x, all on the raw profile.
struct ExcessReport {
    std::vector<Rational> q_values;
    std::vector<ExcessRow> rows;  // sorted by researcher_id
};

ExcessReport excess_comparison(std::span<const ResearcherRecord> records,
                               const std::vector<Rational>& q_values);

}  // namespace citemetrics

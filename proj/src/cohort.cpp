#include "citemetrics/cohort.hpp"

#include "citemetrics/credit.hpp"
#include "citemetrics/errors.hpp"
#include "citemetrics/fitting.hpp"
#include "citemetrics/indices.hpp"
#include "citemetrics/profile.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace citemetrics {

namespace {

const std::array<std::string, 11> kMetrics = {
    "h", "h_pi", "h_a", "g", "e", "h_x", "c_tot", "c_max", "mean_n_pi", "mean_n_a", "hirsch_a",
};

MetricValue from_int(long long v) {
    return MetricValue{static_cast<double>(v), Rational(v)};
}

MetricValue from_rational(const Rational& r) {
    return MetricValue{to_double(r), r};
}

MetricValue from_real(double v) {
    return MetricValue{v, std::nullopt};
}

/// Everything a metric column might need for one researcher, computed once.
struct ResearcherStats {
    const ResearcherInput* input = nullptr;
    CitationProfile raw;
    CoreIndices core;
    Rational c_tot;
    std::int64_t c_max = 0;

    MetricValue metric(const std::string& name) const {
        const ResearcherRecord& record = input->record;
        if (name == "h") return from_int(core.h);
        if (name == "g") return from_int(core.g);
        if (name == "e") return from_real(core.e);
        if (name == "h_x") return from_rational(core.h_x);
        if (name == "c_tot") return from_rational(c_tot);
        if (name == "c_max") return from_int(c_max);
        if (name == "h_a") return from_int(h_a_index(record));
        if (name == "hirsch_a") return from_real(hirsch_a(c_tot, core.h));
        if (name == "mean_n_a")
            return from_rational(mean_core_collaborators(record, CollaboratorKind::Author));
        if (name == "mean_n_pi") {
            if (input->n_pi_known)
                return from_rational(mean_core_collaborators(record, CollaboratorKind::PI));
            return from_rational(
                estimate_mean_n_pi(mean_core_collaborators(record, CollaboratorKind::Author)));
        }
        if (name == "h_pi") {
            if (input->n_pi_known) return from_int(h_pi_index(record));
            return from_int(renormalized_report(record, false).h_pi);
        }
        throw ConfigError("unknown metric '" + name + "'");
    }
};

}  // namespace

bool metric_less(const MetricValue& a, const MetricValue& b) {
    if (a.exact && b.exact) return *a.exact < *b.exact;
    return a.value < b.value;
}

bool metric_equal(const MetricValue& a, const MetricValue& b) {
    if (a.exact && b.exact) return *a.exact == *b.exact;
    return a.value == b.value;
}

std::span<const std::string> known_metrics() {
    return std::span<const std::string>(kMetrics.data(), kMetrics.size());
}

CohortTable build_cohort_table(std::span<const ResearcherInput> researchers,
                               const std::vector<std::string>& metrics) {
    for (const auto& name : metrics) {
        if (std::find(kMetrics.begin(), kMetrics.end(), name) == kMetrics.end())
            throw ConfigError("unknown metric '" + name + "'");
    }
    {
        std::unordered_set<std::string> ids;
        for (const auto& r : researchers) {
            if (!ids.insert(r.record.researcher_id).second)
                throw ValidationError("duplicate researcher_id '" + r.record.researcher_id + "'");
        }
    }

    CohortTable table;
    table.metrics = metrics;

    std::vector<ResearcherStats> stats;
    stats.reserve(researchers.size());
    for (const auto& input : researchers) {
        ResearcherStats s;
        s.input = &input;
        s.raw = build_profile(input.record, CreditScheme::Raw);
        s.core = core_indices(s.raw);
        s.c_tot = total_citations(s.raw);
        for (const auto& paper : input.record.papers)
            s.c_max = std::max(s.c_max, paper.citations);
        stats.push_back(std::move(s));
    }
    std::sort(stats.begin(), stats.end(), [](const ResearcherStats& a, const ResearcherStats& b) {
        return a.input->record.researcher_id < b.input->record.researcher_id;
    });

    for (const auto& s : stats) {
        CohortRow row;
        row.researcher_id = s.input->record.researcher_id;
        row.n_pi_estimated = !s.input->n_pi_known;
        row.values.reserve(metrics.size());
        for (const auto& name : metrics) row.values.push_back(s.metric(name));
        table.rows.push_back(std::move(row));
    }

    if (!table.rows.empty()) {
        table.summary.reserve(metrics.size());
        for (std::size_t m = 0; m < metrics.size(); ++m) {
            MetricSummary summary{table.rows.front().values[m], table.rows.front().values[m]};
            for (const auto& row : table.rows) {
                if (metric_less(row.values[m], summary.min)) summary.min = row.values[m];
                if (metric_less(summary.max, row.values[m])) summary.max = row.values[m];
            }
            table.summary.push_back(std::move(summary));
        }
    }
    return table;
}

CohortTable build_cohort_table(std::span<const ResearcherRecord> records,
                               const std::vector<std::string>& metrics) {
    std::vector<ResearcherInput> inputs;
    inputs.reserve(records.size());
    for (const auto& record : records) inputs.push_back(ResearcherInput{record, true});
    return build_cohort_table(inputs, metrics);
}

Ranking rank_by(const CohortTable& table, const std::string& metric) {
    const auto it = std::find(table.metrics.begin(), table.metrics.end(), metric);
    if (it == table.metrics.end())
        throw ConfigError("metric '" + metric + "' is not present in the table");
    const std::size_t column = static_cast<std::size_t>(it - table.metrics.begin());

    Ranking ranking;
    ranking.metric = metric;
    ranking.order.reserve(table.rows.size());
    for (const auto& row : table.rows)
        ranking.order.push_back(RankedEntry{0, row.researcher_id, row.values[column]});

    std::sort(ranking.order.begin(), ranking.order.end(),
              [](const RankedEntry& a, const RankedEntry& b) {
                  if (!metric_equal(a.value, b.value)) return metric_less(b.value, a.value);
                  return a.researcher_id < b.researcher_id;
              });

    for (std::size_t i = 0; i < ranking.order.size(); ++i) {
        if (i > 0 && metric_equal(ranking.order[i].value, ranking.order[i - 1].value))
            ranking.order[i].rank = ranking.order[i - 1].rank;
        else
            ranking.order[i].rank = static_cast<int>(i) + 1;
    }
    return ranking;
}

namespace {

std::map<std::string, int> rank_map(const Ranking& ranking) {
    std::map<std::string, int> out;
    for (const auto& entry : ranking.order) out.emplace(entry.researcher_id, entry.rank);
    return out;
}

void require_same_set(const std::map<std::string, int>& a, const std::map<std::string, int>& b) {
    if (a.size() != b.size())
        throw ComparisonError("rankings cover different researcher sets");
    for (const auto& [id, rank] : a) {
        (void)rank;
        if (!b.contains(id))
            throw ComparisonError("rankings cover different researcher sets ('" + id +
                                  "' missing from one side)");
    }
}

}  // namespace

std::vector<RankShiftEntry> rank_shift(const Ranking& by_a, const Ranking& by_b) {
    const auto ranks_a = rank_map(by_a);
    const auto ranks_b = rank_map(by_b);
    require_same_set(ranks_a, ranks_b);

    std::vector<RankShiftEntry> shifts;
    shifts.reserve(ranks_a.size());
    for (const auto& [id, rank_a] : ranks_a) {
        const int rank_b = ranks_b.at(id);
        shifts.push_back(RankShiftEntry{id, rank_a, rank_b, rank_b - rank_a});
    }
    std::sort(shifts.begin(), shifts.end(), [](const RankShiftEntry& x, const RankShiftEntry& y) {
        if (x.rank_a != y.rank_a) return x.rank_a < y.rank_a;
        return x.researcher_id < y.researcher_id;
    });
    return shifts;
}

double rank_correlation(const Ranking& by_a, const Ranking& by_b) {
    const auto ranks_a = rank_map(by_a);
    const auto ranks_b = rank_map(by_b);
    require_same_set(ranks_a, ranks_b);

    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(ranks_a.size());
    for (const auto& [id, rank_a] : ranks_a) pairs.emplace_back(rank_a, ranks_b.at(id));

    const std::size_t n = pairs.size();
    if (n < 2) return 1.0;

    long long concordant = 0, discordant = 0, ties_a = 0, ties_b = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const int da = pairs[i].first - pairs[j].first;
            const int db = pairs[i].second - pairs[j].second;
            if (da == 0 && db == 0) {
                ++ties_a;
                ++ties_b;
            } else if (da == 0) {
                ++ties_a;
            } else if (db == 0) {
                ++ties_b;
            } else if ((da > 0) == (db > 0)) {
                ++concordant;
            } else {
                ++discordant;
            }
        }
    }

    const long long n0 = static_cast<long long>(n) * (static_cast<long long>(n) - 1) / 2;
    const double denom = std::sqrt(static_cast<double>(n0 - ties_a)) *
                         std::sqrt(static_cast<double>(n0 - ties_b));
    if (denom == 0.0) {
        // Fully tied on at least one side; identical rank vectors still
        // count as perfect agreement.
        bool identical = true;
        for (const auto& [ra, rb] : pairs)
            if (ra != rb) identical = false;
        return identical ? 1.0 : 0.0;
    }
    return static_cast<double>(concordant - discordant) / denom;
}

ExcessReport excess_comparison(std::span<const ResearcherRecord> records,
                               const std::vector<Rational>& q_values) {
    if (q_values.empty()) throw ConfigError("excess comparison needs at least one q value");

    ExcessReport report;
    report.q_values = q_values;
    report.rows.reserve(records.size());
    for (const auto& record : records) {
        const CitationProfile raw = build_profile(record, CreditScheme::Raw);
        ExcessRow row;
        row.researcher_id = record.researcher_id;
        row.h_q.reserve(q_values.size());
        for (const auto& q : q_values) row.h_q.push_back(h_q_index(raw, q));
        row.e = e_index(raw);
        row.h_x = h_x_index(raw);
        report.rows.push_back(std::move(row));
    }
    std::sort(report.rows.begin(), report.rows.end(),
              [](const ExcessRow& a, const ExcessRow& b) {
                  return a.researcher_id < b.researcher_id;
              });
    return report;
}

}  // namespace citemetrics

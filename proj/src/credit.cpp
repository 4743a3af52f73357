#include "citemetrics/credit.hpp"

#include "citemetrics/errors.hpp"
#include "citemetrics/indices.hpp"
#include "citemetrics/profile.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace citemetrics {

int h_pi_index(const ResearcherRecord& record) {
    return h_index(build_profile(record, CreditScheme::PerPI));
}

int h_a_index(const ResearcherRecord& record) {
    return h_index(build_profile(record, CreditScheme::PerAuthor));
}

Rational mean_core_collaborators(const ResearcherRecord& record, CollaboratorKind kind) {
    const CitationProfile raw = build_profile(record, CreditScheme::Raw);
    const int h = h_index(raw);
    if (h == 0)
        throw DomainError("mean over the h-core is undefined for researcher '" +
                          record.researcher_id + "' (h = 0)");

    std::unordered_map<std::string, const PaperRecord*> by_id;
    by_id.reserve(record.papers.size());
    for (const auto& paper : record.papers) by_id.emplace(paper.paper_id, &paper);

    long long sum = 0;
    for (int i = 0; i < h; ++i) {
        const PaperRecord* paper = by_id.at(raw.entries[static_cast<std::size_t>(i)].paper_id);
        sum += kind == CollaboratorKind::PI ? paper->n_pi : paper->n_authors;
    }
    return Rational(sum, h);
}

double predict_h_pi(int h, const Rational& mean_n_pi) {
    if (h < 0) throw DomainError("h must be non-negative");
    if (mean_n_pi < 1) throw DomainError("mean PI count must be at least 1");
    return static_cast<double>(h) / std::sqrt(to_double(mean_n_pi));
}

double predict_h_pi_from_citations(const Rational& c_tot, const Rational& mean_n_pi) {
    if (c_tot < 0) throw DomainError("total citations must be non-negative");
    if (mean_n_pi < 1) throw DomainError("mean PI count must be at least 1");
    return 0.5 * std::sqrt(to_double(c_tot / mean_n_pi));
}

Rational estimate_mean_n_pi(const Rational& mean_n_a) {
    if (mean_n_a < 1) throw DomainError("mean author count must be at least 1");
    Rational half = mean_n_a / 2;
    return half < 1 ? Rational(1) : half;
}

RenormalizedReport renormalized_report(const ResearcherRecord& record, bool n_pi_known) {
    const CitationProfile raw = build_profile(record, CreditScheme::Raw);
    const int h = h_index(raw);
    if (h == 0)
        throw DomainError("renormalized report is undefined for researcher '" +
                          record.researcher_id + "' (h = 0)");

    RenormalizedReport report;
    report.researcher_id = record.researcher_id;
    report.h = h;
    report.c_tot = total_citations(raw);
    report.h_a = h_a_index(record);
    report.mean_n_a = mean_core_collaborators(record, CollaboratorKind::Author);

    if (n_pi_known) {
        report.h_pi = h_pi_index(record);
        report.mean_n_pi = mean_core_collaborators(record, CollaboratorKind::PI);
        report.n_pi_estimated = false;
    } else {
        report.mean_n_pi = estimate_mean_n_pi(report.mean_n_a);
        const double predicted = predict_h_pi_from_citations(report.c_tot, report.mean_n_pi);
        // Rounded to the report's integer field; clamped into [h_a, h] so the
        // dominance invariant survives the approximation.
        const long long rounded = std::llround(predicted);
        report.h_pi = static_cast<int>(std::clamp<long long>(rounded, report.h_a, h));
        report.n_pi_estimated = true;
    }
    return report;
}

}  // namespace citemetrics

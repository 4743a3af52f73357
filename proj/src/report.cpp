#include "citemetrics/report.hpp"

#include "citemetrics/errors.hpp"
#include "citemetrics/profile.hpp"

namespace citemetrics {

IndexReport build_index_report(const ResearcherInput& input,
                               CreditScheme scheme,
                               std::span<const Rational> q_values) {
    if (scheme == CreditScheme::PerPI && !input.n_pi_known)
        throw ValidationError("researcher '" + input.record.researcher_id +
                              "' has papers without n_pi; a per-PI profile cannot be built");

    const ResearcherRecord& record = input.record;
    const CitationProfile profile = build_profile(record, scheme);

    IndexReport report;
    report.researcher_id = record.researcher_id;
    report.scheme = scheme;
    report.n_papers = static_cast<int>(record.papers.size());
    report.core = core_indices(profile);
    report.c_tot = total_citations(profile);
    for (const auto& q : q_values) report.h_q.emplace_back(q, h_q_index(profile, q));

    // The renormalization block always refers to the raw record.
    const int raw_h =
        scheme == CreditScheme::Raw ? report.core.h
                                    : h_index(build_profile(record, CreditScheme::Raw));
    if (raw_h >= 1) {
        report.renorm = renormalized_report(record, input.n_pi_known);
        report.predicted_h_pi = predict_h_pi(report.renorm->h, report.renorm->mean_n_pi);
    }
    return report;
}

}  // namespace citemetrics

#include "citemetrics/profile.hpp"

#include <algorithm>

namespace citemetrics {

CitationProfile build_profile(const ResearcherRecord& record, CreditScheme scheme) {
    validate(record);

    CitationProfile profile;
    profile.researcher_id = record.researcher_id;
    profile.scheme = scheme;
    profile.entries.reserve(record.papers.size());

    for (const auto& paper : record.papers) {
        Rational value(paper.citations);
        switch (scheme) {
            case CreditScheme::Raw: break;
            case CreditScheme::PerPI: value /= paper.n_pi; break;
            case CreditScheme::PerAuthor: value /= paper.n_authors; break;
        }
        profile.entries.push_back(ProfileEntry{0, paper.paper_id, std::move(value)});
    }

    // Total order: value descending, then paper_id ascending. Input order
    // can never leak into the result.
    std::sort(profile.entries.begin(), profile.entries.end(),
              [](const ProfileEntry& a, const ProfileEntry& b) {
                  if (a.value != b.value) return a.value > b.value;
                  return a.paper_id < b.paper_id;
              });
    for (std::size_t i = 0; i < profile.entries.size(); ++i)
        profile.entries[i].rank = static_cast<int>(i) + 1;
    return profile;
}

Rational total_citations(const CitationProfile& profile) {
    Rational total = 0;
    for (const auto& entry : profile.entries) total += entry.value;
    return total;
}

}  // namespace citemetrics

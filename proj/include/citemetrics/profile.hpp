#pragma once

#include "citemetrics/rational.hpp"
#include "citemetrics/records.hpp"

#include <string>
#include <vector>

namespace citemetrics {

struct ProfileEntry {
    int rank = 0;  // 1-based, consecutive
    std::string paper_id;
    Rational value;

    bool operator==(const ProfileEntry&) const = default;
};

/// A researcher's ranked citation curve C(r): entries sorted by value
/// descending, ties broken by paper_id ascending, ranks 1..N_p.
struct CitationProfile {
    std::string researcher_id;
    CreditScheme scheme = CreditScheme::Raw;
    std::vector<ProfileEntry> entries;

    bool operator==(const CitationProfile&) const = default;
};

/// Builds the ranked curve for the given credit scheme. Values are exact:
/// citations (Raw), citations / n_pi (PerPI), citations / n_authors
/// (PerAuthor). Validates the record first.
CitationProfile build_profile(const ResearcherRecord& record, CreditScheme scheme);

/// Sum of all entry values (C_tot under the profile's scheme). 0 when empty.
Rational total_citations(const CitationProfile& profile);

}  // namespace citemetrics

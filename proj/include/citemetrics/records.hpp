#pragma once

#include "citemetrics/errors.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace citemetrics {

/// How a paper's citations are credited to the researcher under study.
enum class CreditScheme { Raw, PerPI, PerAuthor };

const char* to_string(CreditScheme scheme);

/// Accepts "raw", "pi", "author" (case-sensitive); throws ConfigError otherwise.
CreditScheme credit_scheme_from_string(const std::string& name);

/// One publication of a researcher, with its collaboration counts.
struct PaperRecord {
    std::string paper_id;
    std::int64_t citations = 0;  // >= 0
    int n_authors = 1;           // >= 1
    int n_pi = 1;                // 1 <= n_pi <= n_authors

    bool operator==(const PaperRecord&) const = default;
};

struct ResearcherRecord {
    std::string researcher_id;
    std::vector<PaperRecord> papers;  // paper_id unique within the researcher

    bool operator==(const ResearcherRecord&) const = default;
};

/// Throws ValidationError naming the offending paper_id on the first
/// violated invariant (negative citations, n_authors < 1, n_pi out of
/// [1, n_authors], duplicate paper_id).
void validate(const ResearcherRecord& record);

/// A record plus whether its per-paper PI counts came from the data.
/// When n_pi_known is false the stored n_pi values are placeholders and
/// PI-derived metrics must go through the mean-authors estimate instead.
struct ResearcherInput {
    ResearcherRecord record;
    bool n_pi_known = true;
};

}  // namespace citemetrics

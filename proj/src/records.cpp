#include "citemetrics/records.hpp"

#include <unordered_set>

namespace citemetrics {

const char* to_string(CreditScheme scheme) {
    switch (scheme) {
        case CreditScheme::Raw: return "raw";
        case CreditScheme::PerPI: return "pi";
        case CreditScheme::PerAuthor: return "author";
    }
    return "raw";
}

CreditScheme credit_scheme_from_string(const std::string& name) {
    if (name == "raw") return CreditScheme::Raw;
    if (name == "pi") return CreditScheme::PerPI;
    if (name == "author") return CreditScheme::PerAuthor;
    throw ConfigError("unknown credit scheme '" + name + "' (expected raw, pi, or author)");
}

void validate(const ResearcherRecord& record) {
    std::unordered_set<std::string> seen;
    seen.reserve(record.papers.size());
    for (const auto& paper : record.papers) {
        const std::string where =
            "researcher '" + record.researcher_id + "', paper '" + paper.paper_id + "'";
        if (paper.citations < 0)
            throw ValidationError(where + ": citations must be non-negative");
        if (paper.n_authors < 1)
            throw ValidationError(where + ": n_authors must be at least 1");
        if (paper.n_pi < 1)
            throw ValidationError(where + ": n_pi must be at least 1");
        if (paper.n_pi > paper.n_authors)
            throw ValidationError(where + ": n_pi exceeds n_authors");
        if (!seen.insert(paper.paper_id).second)
            throw ValidationError(where + ": duplicate paper_id");
    }
}

}  // namespace citemetrics

#pragma once

#include "citemetrics/records.hpp"

#include <cstdint>
#include <vector>

namespace citemetrics {

struct IntRange {
    int lo = 1;
    int hi = 1;
};

enum class CitationModel { PowerLawTail, Geometric };

/// Deterministic generator spec: the seed fully determines the cohort.
/// Each researcher draws a collaboration level from n_pi_range and then
/// draws per-paper PI counts uniformly between n_pi_range.lo and that
/// level, so mean PI counts spread across the cohort the way they do in
/// real samples. Author counts are the PI count plus a uniform draw from
/// extra_authors. noise_sigma applies multiplicative log-normal noise to
/// the citation counts.
struct SyntheticCohortSpec {
    int n_researchers = 0;
    IntRange papers_per_researcher{1, 1};
    CitationModel citation_model = CitationModel::Geometric;
    double citation_param = 20.0;  // mean (Geometric) or tail exponent > 1 (PowerLawTail)
    IntRange n_pi_range{1, 1};
    IntRange extra_authors{0, 2};  // non-PI coauthors per paper
    double noise_sigma = 0.0;
    std::uint64_t seed = 0;
};

/// Throws ConfigError on empty/negative ranges, non-positive citation
/// parameters, or negative noise.
void validate(const SyntheticCohortSpec& spec);

/// Generates records that always satisfy the record invariants.
/// Identical spec (including seed) => identical output.
std::vector<ResearcherRecord> generate_synthetic_cohort(const SyntheticCohortSpec& spec);

}  // namespace citemetrics

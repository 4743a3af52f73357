#include "citemetrics/synth.hpp"

#include "citemetrics/errors.hpp"

#include <cmath>
#include <random>
#include <string>

namespace citemetrics {

namespace {

// All draws below are built from the raw mt19937_64 stream with explicit
// transforms, so a spec + seed pins the cohort bit-for-bit regardless of
// how the standard library implements its distribution objects.

double u01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(rng() % span);
}

std::int64_t geometric(std::mt19937_64& rng, double mean) {
    const double p = 1.0 / (1.0 + mean);
    const double u = u01(rng);
    return static_cast<std::int64_t>(std::floor(std::log1p(-u) / std::log1p(-p)));
}

std::int64_t power_law_tail(std::mt19937_64& rng, double exponent) {
    // Continuous Pareto with x_min = 1, floored to an integer count.
    const double u = u01(rng);
    const double x = std::pow(1.0 - u, -1.0 / (exponent - 1.0));
    const double capped = std::min(x, 1e15);
    return static_cast<std::int64_t>(std::floor(capped));
}

double gaussian(std::mt19937_64& rng) {
    const double u1 = 1.0 - u01(rng);  // (0, 1]
    const double u2 = u01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
}

std::string padded_id(char prefix, int index, int width) {
    std::string digits = std::to_string(index);
    std::string out(1, prefix);
    out.append(static_cast<std::size_t>(std::max(0, width - static_cast<int>(digits.size()))),
               '0');
    out += digits;
    return out;
}

int digits_of(int n) {
    int width = 1;
    while (n >= 10) {
        n /= 10;
        ++width;
    }
    return width;
}

}  // namespace

void validate(const SyntheticCohortSpec& spec) {
    if (spec.n_researchers < 0) throw ConfigError("n_researchers must be non-negative");
    if (spec.papers_per_researcher.lo < 0 ||
        spec.papers_per_researcher.lo > spec.papers_per_researcher.hi)
        throw ConfigError("papers_per_researcher range is empty");
    if (spec.n_pi_range.lo < 1 || spec.n_pi_range.lo > spec.n_pi_range.hi)
        throw ConfigError("n_pi range is empty or below 1");
    if (spec.extra_authors.lo < 0 || spec.extra_authors.lo > spec.extra_authors.hi)
        throw ConfigError("extra_authors range is empty");
    if (spec.citation_model == CitationModel::Geometric && !(spec.citation_param > 0.0))
        throw ConfigError("geometric citation model needs a positive mean");
    if (spec.citation_model == CitationModel::PowerLawTail && !(spec.citation_param > 1.0))
        throw ConfigError("power-law citation model needs a tail exponent > 1");
    if (spec.noise_sigma < 0.0) throw ConfigError("noise_sigma must be non-negative");
}

std::vector<ResearcherRecord> generate_synthetic_cohort(const SyntheticCohortSpec& spec) {
    validate(spec);
    std::mt19937_64 rng(spec.seed);

    const int researcher_width = digits_of(std::max(1, spec.n_researchers));
    const int paper_width = digits_of(std::max(1, spec.papers_per_researcher.hi));

    std::vector<ResearcherRecord> cohort;
    cohort.reserve(static_cast<std::size_t>(spec.n_researchers));

    for (int r = 1; r <= spec.n_researchers; ++r) {
        ResearcherRecord record;
        record.researcher_id = padded_id('r', r, researcher_width);

        const int n_papers =
            uniform_int(rng, spec.papers_per_researcher.lo, spec.papers_per_researcher.hi);
        // Collaboration level of this researcher: papers draw their PI count
        // up to this bound, so mean PI counts spread across the cohort.
        const int level = uniform_int(rng, spec.n_pi_range.lo, spec.n_pi_range.hi);

        record.papers.reserve(static_cast<std::size_t>(n_papers));
        for (int p = 1; p <= n_papers; ++p) {
            PaperRecord paper;
            paper.paper_id = padded_id('p', p, paper_width);
            paper.n_pi = uniform_int(rng, spec.n_pi_range.lo, level);
            paper.n_authors =
                paper.n_pi + uniform_int(rng, spec.extra_authors.lo, spec.extra_authors.hi);

            std::int64_t citations = spec.citation_model == CitationModel::Geometric
                                         ? geometric(rng, spec.citation_param)
                                         : power_law_tail(rng, spec.citation_param);
            if (spec.noise_sigma > 0.0) {
                const double noisy =
                    static_cast<double>(citations) * std::exp(spec.noise_sigma * gaussian(rng));
                citations = static_cast<std::int64_t>(std::llround(noisy));
            }
            paper.citations = std::max<std::int64_t>(0, citations);
            record.papers.push_back(std::move(paper));
        }
        cohort.push_back(std::move(record));
    }
    return cohort;
}

}  // namespace citemetrics

#pragma once

// Brute-force reference implementations and randomized-input helpers shared
// by the unit and acceptance suites. The oracles scan every candidate k
// independently and never reuse the library's sorted-prefix walk, so an
// agreement between the two is meaningful.

#include "citemetrics/profile.hpp"
#include "citemetrics/rational.hpp"
#include "citemetrics/records.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace testutil {

using citemetrics::CitationProfile;
using citemetrics::CreditScheme;
using citemetrics::PaperRecord;
using citemetrics::Rational;
using citemetrics::ResearcherRecord;

inline int oracle_h(const std::vector<Rational>& values) {
    int best = 0;
    const int n = static_cast<int>(values.size());
    for (int k = 0; k <= n; ++k) {
        int count = 0;
        for (const auto& v : values)
            if (v >= k) ++count;
        if (count >= k) best = k;
    }
    return best;
}

inline int oracle_h_q(const std::vector<Rational>& values, const Rational& q) {
    int best = 0;
    const int n = static_cast<int>(values.size());
    for (int k = 0; k <= n; ++k) {
        int count = 0;
        for (const auto& v : values)
            if (v >= q * k) ++count;
        if (count >= k) best = k;
    }
    return best;
}

inline int oracle_g(const std::vector<Rational>& values) {
    std::vector<Rational> sorted = values;
    std::sort(sorted.begin(), sorted.end(), std::greater<Rational>());
    int best = 0;
    const int n = static_cast<int>(sorted.size());
    for (int k = 0; k <= n; ++k) {
        Rational sum = 0;
        for (int i = 0; i < k; ++i) sum += sorted[static_cast<std::size_t>(i)];
        if (sum >= Rational(static_cast<long long>(k) * k)) best = k;
    }
    return best;
}

inline std::string padded(const char* prefix, int index) {
    std::string digits = std::to_string(index);
    std::string out = prefix;
    if (digits.size() < 2) out += '0';
    return out + digits;
}

/// Fixture profile from plain integer citation counts (raw scheme).
inline CitationProfile profile_of(const std::vector<long long>& citations) {
    ResearcherRecord record;
    record.researcher_id = "fixture";
    for (std::size_t i = 0; i < citations.size(); ++i)
        record.papers.push_back(
            PaperRecord{padded("p", static_cast<int>(i) + 1), citations[i], 1, 1});
    return build_profile(record, CreditScheme::Raw);
}

inline int uniform(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

/// A randomized profile (possibly fractional) plus its value multiset
/// derived straight from the draw, bypassing build_profile.
struct ProfileCase {
    CitationProfile profile;
    std::vector<Rational> values;
};

inline ProfileCase random_profile_case(std::mt19937_64& rng, bool fractional,
                                       int max_papers = 12, int max_value = 50,
                                       int max_den = 6) {
    const int n = uniform(rng, 0, max_papers);
    ResearcherRecord record;
    record.researcher_id = "rnd";
    ProfileCase out;
    for (int i = 0; i < n; ++i) {
        const int den = fractional ? uniform(rng, 1, max_den) : 1;
        const long long num = uniform(rng, 0, max_value * den);
        record.papers.push_back(PaperRecord{padded("p", i + 1), num, den, den});
        out.values.emplace_back(num, den);
    }
    out.profile = build_profile(
        record, fractional ? CreditScheme::PerPI : CreditScheme::Raw);
    return out;
}

/// A random valid record with mixed author/PI counts.
inline ResearcherRecord random_record(std::mt19937_64& rng, int max_papers = 12,
                                      int max_citations = 50, int max_authors = 6) {
    const int n = uniform(rng, 0, max_papers);
    ResearcherRecord record;
    record.researcher_id = "rnd";
    for (int i = 0; i < n; ++i) {
        PaperRecord paper;
        paper.paper_id = padded("p", i + 1);
        paper.citations = uniform(rng, 0, max_citations);
        paper.n_authors = uniform(rng, 1, max_authors);
        paper.n_pi = uniform(rng, 1, paper.n_authors);
        record.papers.push_back(std::move(paper));
    }
    return record;
}

/// The constructed citation curve matching the sample-curve constraints:
/// h = 19, h_2 = 12, h_4 = 8, h_x = 26 (top-19 sum 855 = 19^2 + 19 * 26).
inline std::vector<long long> sample_curve_h19() {
    return {180, 120, 90, 49, 45, 40, 36, 33, 32, 30, 27, 24,
            24,  23,  22, 21, 20, 20, 19, 15, 7,  2,  0};
}

}  // namespace testutil

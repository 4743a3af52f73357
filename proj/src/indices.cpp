#include "citemetrics/indices.hpp"

#include "citemetrics/errors.hpp"

#include <cmath>

namespace citemetrics {

int h_index(const CitationProfile& profile) {
    // Entries are sorted descending, so "entry at rank k has value >= k"
    // holds for a prefix of ranks and the first failure ends it.
    int h = 0;
    for (const auto& entry : profile.entries) {
        if (entry.value >= entry.rank)
            h = entry.rank;
        else
            break;
    }
    return h;
}

int h_q_index(const CitationProfile& profile, const Rational& q) {
    if (q <= 0) throw DomainError("h_q threshold factor q must be positive");
    int k = 0;
    for (const auto& entry : profile.entries) {
        if (entry.value >= q * entry.rank)
            k = entry.rank;
        else
            break;
    }
    return k;
}

int g_index(const CitationProfile& profile) {
    Rational running = 0;
    int g = 0;
    for (const auto& entry : profile.entries) {
        running += entry.value;
        const long long k = entry.rank;
        if (running >= Rational(k * k)) g = entry.rank;
    }
    return g;
}

Rational core_sum(const CitationProfile& profile) {
    const int h = h_index(profile);
    Rational sum = 0;
    for (int i = 0; i < h; ++i) sum += profile.entries[static_cast<std::size_t>(i)].value;
    return sum;
}

Rational excess_sum(const CitationProfile& profile) {
    const int h = h_index(profile);
    return core_sum(profile) - Rational(static_cast<long long>(h) * h);
}

double e_index(const CitationProfile& profile) {
    return std::sqrt(to_double(excess_sum(profile)));
}

Rational h_x_index(const CitationProfile& profile) {
    const int h = h_index(profile);
    if (h == 0) return Rational(0);
    return excess_sum(profile) / h;
}

CoreIndices core_indices(const CitationProfile& profile) {
    CoreIndices out;
    out.h = h_index(profile);
    Rational sum = 0;
    for (int i = 0; i < out.h; ++i) sum += profile.entries[static_cast<std::size_t>(i)].value;
    out.c_h = sum;
    out.c_hx = sum - Rational(static_cast<long long>(out.h) * out.h);
    out.e = std::sqrt(to_double(out.c_hx));
    out.h_x = out.h == 0 ? Rational(0) : out.c_hx / out.h;
    out.g = g_index(profile);
    return out;
}

}  // namespace citemetrics

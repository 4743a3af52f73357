#pragma once

#include "citemetrics/profile.hpp"
#include "citemetrics/rational.hpp"

namespace citemetrics {

/// The h-family indices of one citation curve, mutually consistent:
/// c_hx = c_h - h^2, e = sqrt(c_hx), h_x = c_hx / h (0 when h = 0),
/// h <= g <= N_p.
struct CoreIndices {
    int h = 0;
    Rational c_h;    // sum of citations in the h-core
    Rational c_hx;   // core citations in excess of h^2
    double e = 0.0;  // sqrt(c_hx)
    Rational h_x;    // c_hx / h, the mean core citation count above h
    int g = 0;
};

/// Largest k >= 0 such that at least k entries have value >= k.
int h_index(const CitationProfile& profile);

/// Largest k >= 0 such that at least k entries have value >= q * k.
/// h_q_index(p, 1) == h_index(p). Throws DomainError for q <= 0.
int h_q_index(const CitationProfile& profile, const Rational& q);

/// Largest g with 0 <= g <= N_p such that the top g values sum to >= g^2.
int g_index(const CitationProfile& profile);

/// C_h: sum of the top h values; 0 when h = 0.
Rational core_sum(const CitationProfile& profile);

/// C_{h,x} = C_h - h^2; non-negative by the definition of h.
Rational excess_sum(const CitationProfile& profile);

/// e = sqrt(C_{h,x}).
double e_index(const CitationProfile& profile);

/// h_x = C_{h,x} / h; defined as 0 when h = 0.
Rational h_x_index(const CitationProfile& profile);

/// All of the above computed from a single scan of the profile.
CoreIndices core_indices(const CitationProfile& profile);

}  // namespace citemetrics

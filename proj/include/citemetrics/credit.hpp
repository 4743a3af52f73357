#pragma once

#include "citemetrics/rational.hpp"
#include "citemetrics/records.hpp"

#include <string>

namespace citemetrics {

enum class CollaboratorKind { PI, Author };

/// Raw and renormalized indices of one researcher, side by side.
/// Invariants: h_a <= h_pi <= h and 1 <= mean_n_pi <= mean_n_a.
/// When n_pi_estimated is true, mean_n_pi came from the 0.5 * <N_A>
/// heuristic and h_pi from the sqrt(C_tot / <N_PI>) / 2 approximation
/// (rounded, clamped into [h_a, h]); exact per-paper PI counts were
/// not available.
struct RenormalizedReport {
    std::string researcher_id;
    int h = 0;
    int h_pi = 0;
    int h_a = 0;
    Rational mean_n_pi;  // mean PI count over the raw h-core
    Rational mean_n_a;   // mean author count over the raw h-core
    Rational c_tot;      // raw total citations
    bool n_pi_estimated = false;
};

/// h-index of the per-PI renormalized curve.
int h_pi_index(const ResearcherRecord& record);

/// h-index of the per-author renormalized curve.
int h_a_index(const ResearcherRecord& record);

/// Arithmetic mean of n_pi (or n_authors) over the papers at raw-scheme
/// ranks 1..h, ties resolved by the profile's deterministic order.
/// Throws DomainError when the raw h is 0.
Rational mean_core_collaborators(const ResearcherRecord& record, CollaboratorKind kind);

/// h / sqrt(<N_PI>): the average-sense approximation of h_pi. Never equal
/// to the exact index in general. Throws DomainError for mean_n_pi < 1.
double predict_h_pi(int h, const Rational& mean_n_pi);

/// sqrt(C_tot / <N_PI>) / 2.
double predict_h_pi_from_citations(const Rational& c_tot, const Rational& mean_n_pi);

/// The fallback when PI counts are unavailable: <N_PI> = 0.5 * <N_A>,
/// clamped below at 1 (a paper has at least one PI).
Rational estimate_mean_n_pi(const Rational& mean_n_a);

/// Bundles h, h_pi, h_a, core means and the raw total for one researcher.
/// With n_pi_known = false the PI figures go through estimate_mean_n_pi
/// and the citation-based prediction, and the report is flagged.
/// Throws DomainError when the raw h is 0 (core means undefined).
RenormalizedReport renormalized_report(const ResearcherRecord& record, bool n_pi_known = true);

}  // namespace citemetrics

#pragma once

#include "citemetrics/credit.hpp"
#include "citemetrics/indices.hpp"
#include "citemetrics/rational.hpp"
#include "citemetrics/records.hpp"

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace citemetrics {

/// Everything computed for one researcher under one credit scheme: the
/// core index bundle, the h_q spectrum, and the raw-scheme renormalization
/// block (absent when the raw h is 0, where core means are undefined).
struct IndexReport {
    std::string researcher_id;
    CreditScheme scheme = CreditScheme::Raw;
    int n_papers = 0;
    CoreIndices core;
    Rational c_tot;  // total citations under `scheme`
    std::vector<std::pair<Rational, int>> h_q;
    std::optional<RenormalizedReport> renorm;
    std::optional<double> predicted_h_pi;  // h / sqrt(<N_PI>)
};

/// Builds the report. PerPI profiles require known per-paper PI counts;
/// requesting scheme PerPI for an estimated researcher raises
/// ValidationError.
IndexReport build_index_report(const ResearcherInput& input,
                               CreditScheme scheme,
                               std::span<const Rational> q_values);

}  // namespace citemetrics

#pragma once

#include <stdexcept>

namespace citemetrics {

/// Input data violates a record or dataset invariant.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input stream (CSV / JSON-lines); message carries the line number.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad configuration: unknown metric, invalid synthetic-cohort spec, bad flag.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operation called outside its mathematical domain (q <= 0, h = 0, ...).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Degenerate fit input (too few points, non-positive coordinates, ...).
struct FitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Rankings over mismatched researcher sets cannot be compared.
struct ComparisonError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace citemetrics

#pragma once

#include "citemetrics/rational.hpp"

#include <span>
#include <vector>

namespace citemetrics {

enum class FitModel { PowerLaw, ProportionalLaw };

const char* to_string(FitModel model);

struct PointXY {
    double x = 0.0;
    double y = 0.0;
};

/// Fitted parameters plus residual statistics. For PowerLaw (y = a / x^b)
/// the residuals live in log space and r_squared is the centered R^2 of the
/// log-log regression. For ProportionalLaw (y = s * x, through the origin)
/// residuals are linear and r_squared is uncentered (1 - SSres / sum y^2),
/// since the centered form can go negative for through-origin fits.
struct FitResult {
    FitModel model = FitModel::PowerLaw;
    double a = 0.0;  // PowerLaw amplitude
    double b = 0.0;  // PowerLaw exponent
    double s = 0.0;  // ProportionalLaw slope
    int n_points = 0;
    double rms_residual = 0.0;
    double r_squared = 0.0;
};

/// Ordinary least squares on (ln x, ln y): ln y = ln a - b ln x.
/// Requires >= 2 points, all coordinates > 0, and at least two distinct x.
FitResult fit_power_law(std::span<const PointXY> points);

/// Least squares through the origin: s = sum(xy) / sum(x^2).
/// Requires >= 1 point with x > 0 and non-negative coordinates.
FitResult fit_proportional(std::span<const PointXY> points);

/// The ratio C_tot / h^2 (empirically near 4). Throws DomainError for h < 1.
double hirsch_a(const Rational& c_tot, int h);

struct HistogramBin {
    double lower = 0.0;  // left edge; bins are [lower, lower + width)
    int count = 0;
};

/// Left-closed right-open bins of the given width anchored at 0; only
/// non-empty bins are returned, in ascending order of lower edge.
std::vector<HistogramBin> hirsch_a_histogram(std::span<const double> values, double bin_width);

}  // namespace citemetrics

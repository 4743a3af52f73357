#include "citemetrics/fitting.hpp"

#include "citemetrics/errors.hpp"

#include <cmath>
#include <map>

namespace citemetrics {

const char* to_string(FitModel model) {
    switch (model) {
        case FitModel::PowerLaw: return "power_law";
        case FitModel::ProportionalLaw: return "proportional";
    }
    return "power_law";
}

FitResult fit_power_law(std::span<const PointXY> points) {
    if (points.size() < 2) throw FitError("power-law fit needs at least 2 points");

    const std::size_t n = points.size();
    std::vector<double> lx(n), ly(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(points[i].x > 0.0) || !(points[i].y > 0.0))
            throw FitError("power-law fit requires strictly positive coordinates");
        lx[i] = std::log(points[i].x);
        ly[i] = std::log(points[i].y);
    }

    double mean_lx = 0.0, mean_ly = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mean_lx += lx[i];
        mean_ly += ly[i];
    }
    mean_lx /= static_cast<double>(n);
    mean_ly /= static_cast<double>(n);

    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (lx[i] - mean_lx) * (lx[i] - mean_lx);
        sxy += (lx[i] - mean_lx) * (ly[i] - mean_ly);
    }
    if (sxx == 0.0) throw FitError("power-law fit needs at least two distinct x values");

    const double slope = sxy / sxx;
    const double intercept = mean_ly - slope * mean_lx;

    double ss_res = 0.0, ss_tot = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = ly[i] - (intercept + slope * lx[i]);
        ss_res += r * r;
        ss_tot += (ly[i] - mean_ly) * (ly[i] - mean_ly);
    }

    FitResult fit;
    fit.model = FitModel::PowerLaw;
    fit.a = std::exp(intercept);
    fit.b = -slope;
    fit.n_points = static_cast<int>(n);
    fit.rms_residual = std::sqrt(ss_res / static_cast<double>(n));
    fit.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
    return fit;
}

FitResult fit_proportional(std::span<const PointXY> points) {
    if (points.empty()) throw FitError("proportional fit needs at least 1 point");

    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (const auto& p : points) {
        if (p.x < 0.0 || p.y < 0.0)
            throw FitError("proportional fit requires non-negative coordinates");
        sxx += p.x * p.x;
        sxy += p.x * p.y;
        syy += p.y * p.y;
    }
    if (sxx == 0.0) throw FitError("proportional fit needs at least one point with x > 0");

    FitResult fit;
    fit.model = FitModel::ProportionalLaw;
    fit.s = sxy / sxx;
    fit.n_points = static_cast<int>(points.size());

    double ss_res = 0.0;
    for (const auto& p : points) {
        const double r = p.y - fit.s * p.x;
        ss_res += r * r;
    }
    fit.rms_residual = std::sqrt(ss_res / static_cast<double>(points.size()));
    // Uncentered R^2 for the through-origin model.
    fit.r_squared = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;
    return fit;
}

double hirsch_a(const Rational& c_tot, int h) {
    if (h < 1) throw DomainError("hirsch_a is undefined for h < 1");
    return to_double(c_tot / Rational(static_cast<long long>(h) * h));
}

std::vector<HistogramBin> hirsch_a_histogram(std::span<const double> values, double bin_width) {
    if (!(bin_width > 0.0)) throw DomainError("bin width must be positive");

    std::map<long long, int> counts;
    for (double v : values) {
        const long long idx = static_cast<long long>(std::floor(v / bin_width));
        ++counts[idx];
    }

    std::vector<HistogramBin> bins;
    bins.reserve(counts.size());
    for (const auto& [idx, count] : counts)
        bins.push_back(HistogramBin{static_cast<double>(idx) * bin_width, count});
    return bins;
}

}  // namespace citemetrics

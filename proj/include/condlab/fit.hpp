#ifndef CONDLAB_FIT_HPP
#define CONDLAB_FIT_HPP

#include <string>
#include <vector>

#include "condlab/conditionality.hpp"

namespace condlab {

struct FitReport {
    std::string model;  // "power", "log_power", "ratio_limit"
    double gamma = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
    long range_lo = 0;
    long range_hi = 0;
    int points_used = 0;
    // log_power only: mean of value(m^2)/value(m) over available pairs
    double doubling_ratio = 0.0;
    // ratio_limit only
    double limit = 0.0;   // last-third mean
    double spread = 0.0;  // last-third max/min
    bool bounded_verdict = false;

    std::string to_json() const;
};

/// Least squares of log value on log m. Uses only exact / lower-witness
/// points; envelopes are never fit.
FitReport fit_power(const GrowthSeries& series);

/// Least squares of log value on log log m, plus the doubling diagnostic
/// value(m^2)/value(m) over pairs present in the series.
FitReport fit_log_power(const GrowthSeries& series);

/// Limit estimate for a ratio series: last-third mean, last-third max/min
/// spread, whole-series fitted slope of log value against log m; verdict
/// "bounded" iff |slope| < threshold.
FitReport ratio_stabilization(const GrowthSeries& series, double slope_threshold = 0.02);

/// Plain least squares helper: slope, intercept, r2 of y against x.
struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 1.0;
};
LineFit least_squares(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace condlab

#endif

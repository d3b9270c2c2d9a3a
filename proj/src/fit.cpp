#include "condlab/fit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include "condlab/errors.hpp"

namespace condlab {

LineFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) throw InsufficientData("least_squares needs >= 2 points");
    const double n = double(x.size());
    double xm = 0.0, ym = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        xm += x[i];
        ym += y[i];
    }
    xm /= n;
    ym /= n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - xm) * (x[i] - xm);
        sxy += (x[i] - xm) * (y[i] - ym);
        syy += (y[i] - ym) * (y[i] - ym);
    }
    if (sxx == 0.0) throw InsufficientData("least_squares x values are constant");
    LineFit f;
    f.slope = sxy / sxx;
    f.intercept = ym - f.slope * xm;
    double ssr = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - (f.intercept + f.slope * x[i]);
        ssr += r * r;
    }
    f.r2 = syy > 0.0 ? 1.0 - ssr / syy : 1.0;
    return f;
}

namespace {

// exact and lower-witness entries only; envelopes are overlays, never data
std::vector<SeriesEntry> fit_points(const GrowthSeries& s) {
    std::vector<SeriesEntry> pts;
    for (const auto& e : s.entries)
        if (e.kind != ValueKind::UpperEnvelope) pts.push_back(e);
    return pts;
}

}  // namespace

FitReport fit_power(const GrowthSeries& series) {
    const auto pts = fit_points(series);
    if (pts.size() < 5) throw InsufficientData("fit_power needs >= 5 points");
    std::vector<double> x, y;
    for (const auto& e : pts) {
        if (!(e.value > 0.0) || e.m < 1) throw InvalidParameter("fit_power needs positive values and m >= 1");
        x.push_back(std::log(double(e.m)));
        y.push_back(std::log(e.value));
    }
    const LineFit f = least_squares(x, y);
    FitReport rep;
    rep.model = "power";
    rep.gamma = f.slope;
    rep.intercept = f.intercept;
    rep.r2 = f.r2;
    rep.range_lo = pts.front().m;
    rep.range_hi = pts.back().m;
    rep.points_used = int(pts.size());
    return rep;
}

FitReport fit_log_power(const GrowthSeries& series) {
    const auto pts = fit_points(series);
    if (pts.size() < 5) throw InsufficientData("fit_log_power needs >= 5 points");
    std::vector<double> x, y;
    std::map<long, double> by_m;
    for (const auto& e : pts) {
        if (!(e.value > 0.0) || e.m < 3) throw InvalidParameter("fit_log_power needs positive values and m >= 3");
        x.push_back(std::log(std::log(double(e.m))));
        y.push_back(std::log(e.value));
        by_m[e.m] = e.value;
    }
    const LineFit f = least_squares(x, y);
    FitReport rep;
    rep.model = "log_power";
    rep.gamma = f.slope;
    rep.intercept = f.intercept;
    rep.r2 = f.r2;
    rep.range_lo = pts.front().m;
    rep.range_hi = pts.back().m;
    rep.points_used = int(pts.size());

    // doubling diagnostic: value(m^2)/value(m) -> 2^gamma, better conditioned
    // than the log-log fit on short ranges
    double acc = 0.0;
    int cnt = 0;
    for (const auto& [m, v] : by_m) {
        const long sq = m * m;
        auto it = by_m.find(sq);
        if (m >= 2 && it != by_m.end() && v > 0.0) {
            acc += it->second / v;
            ++cnt;
        }
    }
    rep.doubling_ratio = cnt > 0 ? acc / cnt : 0.0;
    return rep;
}

FitReport ratio_stabilization(const GrowthSeries& series, double slope_threshold) {
    const auto pts = fit_points(series);
    if (pts.size() < 5) throw InsufficientData("ratio_stabilization needs >= 5 points");
    std::vector<double> x, y;
    for (const auto& e : pts) {
        if (!(e.value > 0.0) || e.m < 1)
            throw InvalidParameter("ratio_stabilization needs positive values and m >= 1");
        x.push_back(std::log(double(e.m)));
        y.push_back(std::log(e.value));
    }
    const LineFit f = least_squares(x, y);

    const std::size_t tail_start = pts.size() - pts.size() / 3 - 1;
    double mean = 0.0, lo = pts.back().value, hi = pts.back().value;
    int cnt = 0;
    for (std::size_t i = tail_start; i < pts.size(); ++i) {
        mean += pts[i].value;
        lo = std::min(lo, pts[i].value);
        hi = std::max(hi, pts[i].value);
        ++cnt;
    }
    mean /= double(cnt);

    FitReport rep;
    rep.model = "ratio_limit";
    rep.gamma = f.slope;
    rep.intercept = f.intercept;
    rep.r2 = f.r2;
    rep.range_lo = pts.front().m;
    rep.range_hi = pts.back().m;
    rep.points_used = int(pts.size());
    rep.limit = mean;
    rep.spread = hi / lo;
    rep.bounded_verdict = std::fabs(f.slope) < slope_threshold;
    return rep;
}

std::string FitReport::to_json() const {
    char buf[512];
    std::snprintf(buf, sizeof buf,
                  "{\"model\":\"%s\",\"gamma\":%.17g,\"intercept\":%.17g,\"r2\":%.17g,"
                  "\"range\":[%ld,%ld],\"points_used\":%d,\"doubling_ratio\":%.17g,"
                  "\"limit\":%.17g,\"spread\":%.17g,\"bounded\":%s}",
                  model.c_str(), gamma, intercept, r2, range_lo, range_hi, points_used, doubling_ratio, limit,
                  spread, bounded_verdict ? "true" : "false");
    return buf;
}

}  // namespace condlab

#include "condlab/sequence_spaces.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "condlab/errors.hpp"

namespace condlab {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

WeightSeq::WeightSeq(std::vector<double> w) : w_(std::move(w)) {
    if (w_.empty()) throw InvalidParameter("empty weight sequence");
    s_.resize(w_.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < w_.size(); ++i) {
        if (!(w_[i] > 0.0)) throw InvalidParameter("weight entries must be positive");
        acc += w_[i];
        s_[i] = acc;
    }
}

double WeightSeq::doubling_constant() const {
    double d = 0.0;
    for (int m = 1; 2 * m <= size(); ++m) d = std::max(d, s(2 * m) / s(m));
    return d;
}

SpaceSpec SpaceSpec::lp(double p) {
    if (!(p > 0.0)) throw InvalidParameter("lp exponent must be positive");
    SpaceSpec s;
    s.kind = SpaceKind::Lp;
    s.p = p;
    s.q = p;
    return s;
}

SpaceSpec SpaceSpec::lorentz(double p, double q) {
    if (!(p > 0.0) || p == kInf) throw InvalidParameter("lorentz primary exponent must be finite positive");
    if (!(q > 0.0)) throw InvalidParameter("lorentz secondary exponent must be positive");
    SpaceSpec s;
    s.kind = SpaceKind::Lorentz;
    s.p = p;
    s.q = q;
    return s;
}

SpaceSpec SpaceSpec::weighted_lorentz(std::shared_ptr<const WeightSeq> w, double q) {
    if (!w) throw InvalidParameter("weighted_lorentz needs a weight");
    if (!(q > 0.0)) throw InvalidParameter("weighted_lorentz exponent must be positive");
    SpaceSpec s;
    s.kind = SpaceKind::WeightedLorentz;
    s.q = q;
    s.weight = std::move(w);
    return s;
}

std::string SpaceSpec::describe() const {
    char buf[64];
    switch (kind) {
        case SpaceKind::Lp:
            if (p == kInf) return "lp:inf";
            std::snprintf(buf, sizeof buf, "lp:%g", p);
            return buf;
        case SpaceKind::Lorentz:
            if (q == kInf) {
                std::snprintf(buf, sizeof buf, "lorentz:%g,inf", p);
            } else {
                std::snprintf(buf, sizeof buf, "lorentz:%g,%g", p, q);
            }
            return buf;
        default:
            if (q == kInf) return "wlorentz:<w>,inf";
            std::snprintf(buf, sizeof buf, "wlorentz:<w>,%g", q);
            return buf;
    }
}

std::shared_ptr<const WeightSeq> load_weight_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidParameter("cannot read weight file " + path);
    std::vector<double> w;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line.rfind("n,", 0) == 0) continue;
        int n = 0;
        double v = 0.0;
        if (std::sscanf(line.c_str(), "%d,%lf", &n, &v) != 2)
            throw InvalidParameter("bad weight file row: " + line);
        if (n != int(w.size()) + 1) throw InvalidParameter("weight file rows must be consecutive from 1");
        w.push_back(v);
    }
    return std::make_shared<WeightSeq>(std::move(w));
}

namespace {

double parse_exponent(const std::string& s) {
    if (s == "inf" || s == "Inf" || s == "INF") return kInf;
    try {
        return std::stod(s);
    } catch (const std::exception&) {
        throw InvalidParameter("bad exponent '" + s + "'");
    }
}

}  // namespace

SpaceSpec parse_space_spec(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw InvalidParameter("space spec needs kind:params, got '" + text + "'");
    const std::string kind = text.substr(0, colon);
    const std::string rest = text.substr(colon + 1);
    if (kind == "lp") return SpaceSpec::lp(parse_exponent(rest));
    const auto comma = rest.rfind(',');
    if (comma == std::string::npos) throw InvalidParameter("space spec '" + text + "' needs two parameters");
    if (kind == "lorentz")
        return SpaceSpec::lorentz(parse_exponent(rest.substr(0, comma)), parse_exponent(rest.substr(comma + 1)));
    if (kind == "wlorentz")
        return SpaceSpec::weighted_lorentz(load_weight_file(rest.substr(0, comma)),
                                           parse_exponent(rest.substr(comma + 1)));
    throw InvalidParameter("unknown space kind '" + kind + "'");
}

std::vector<double> decreasing_rearrangement(const std::vector<double>& f) {
    std::vector<double> a;
    a.reserve(f.size());
    for (double v : f)
        if (v != 0.0) a.push_back(std::fabs(v));
    std::sort(a.begin(), a.end(), std::greater<>());
    return a;
}

namespace {

double lorentz_s(const SpaceSpec& spec, int n) {
    if (spec.kind == SpaceKind::Lorentz) return std::pow(double(n), 1.0 / spec.p);
    return spec.weight->s(n);
}

double lorentz_density(const SpaceSpec& spec, int n) {
    if (spec.kind == SpaceKind::Lorentz) return 1.0 / double(n);
    return spec.weight->w(n) / spec.weight->s(n);
}

}  // namespace

double space_norm(const SpaceSpec& spec, const std::vector<double>& f) {
    if (spec.kind == SpaceKind::Lp) {
        if (spec.p == kInf) {
            double m = 0.0;
            for (double v : f) m = std::max(m, std::fabs(v));
            return m;
        }
        // summed in rearranged order so permutations give bit-identical values
        double s = 0.0;
        for (double v : decreasing_rearrangement(f)) s += std::pow(v, spec.p);
        return std::pow(s, 1.0 / spec.p);
    }
    const std::vector<double> a = decreasing_rearrangement(f);
    if (a.empty()) return 0.0;
    if (spec.kind == SpaceKind::WeightedLorentz && int(a.size()) > spec.weight->size())
        throw InvalidParameter("weight sequence shorter than vector support");
    if (spec.q == kInf) {
        double m = 0.0;
        for (int n = 1; n <= int(a.size()); ++n) m = std::max(m, lorentz_s(spec, n) * a[n - 1]);
        return m;
    }
    double s = 0.0;
    for (int n = 1; n <= int(a.size()); ++n)
        s += std::pow(lorentz_s(spec, n) * a[n - 1], spec.q) * lorentz_density(spec, n);
    return std::pow(s, 1.0 / spec.q);
}

NormVariants norm_variants(const WeightSeq& w, double q, const std::vector<double>& f) {
    if (!(q > 0.0) || q == kInf) throw InvalidParameter("norm_variants needs finite q > 0");
    const std::vector<double> a = decreasing_rearrangement(f);
    if (int(a.size()) > w.size()) throw InvalidParameter("weight sequence shorter than vector support");
    NormVariants out{0.0, 0.0, 0.0};
    for (int n = 1; n <= int(a.size()); ++n) {
        const double sa = w.s(n) * a[n - 1];
        out.defining += std::pow(sa, q) * w.w(n) / w.s(n);
        out.lrp_form += std::pow(sa, q) / double(n);
        out.increment += std::pow(a[n - 1], q) * (std::pow(w.s(n), q) - std::pow(w.s(n - 1), q));
    }
    out.defining = std::pow(out.defining, 1.0 / q);
    out.lrp_form = std::pow(out.lrp_form, 1.0 / q);
    out.increment = std::pow(out.increment, 1.0 / q);
    return out;
}

double harmonic(int m) {
    double h = 0.0;
    for (int n = 1; n <= m; ++n) h += 1.0 / double(n);
    return h;
}

double harmonic_weighted(const WeightSeq& w, int m) {
    if (m > w.size()) throw InvalidParameter("harmonic_weighted beyond stored weight range");
    double h = 0.0;
    for (int n = 1; n <= m; ++n) h += w.w(n) / w.s(n);
    return h;
}

double delta_closed_form(const SpaceSpec& s1, const SpaceSpec& s2, int m) {
    if (m < 1) throw InvalidParameter("delta_closed_form needs m >= 1");
    if (s1.kind != s2.kind) throw UnsupportedPair(s1.describe() + " vs " + s2.describe());
    auto inv = [](double e) { return e == kInf ? 0.0 : 1.0 / e; };
    switch (s1.kind) {
        case SpaceKind::Lp: {
            const double d = inv(s1.p) - inv(s2.p);
            if (d < 0.0) throw UnsupportedPair("need q <= r");
            return std::pow(double(m), d);
        }
        case SpaceKind::Lorentz: {
            if (s1.p != s2.p) throw UnsupportedPair("lorentz pair needs equal primary exponent");
            const double d = inv(s1.q) - inv(s2.q);
            if (d < 0.0) throw UnsupportedPair("need q <= r");
            return std::pow(harmonic(m), d);
        }
        default: {
            if (s1.weight != s2.weight) throw UnsupportedPair("weighted pair needs the same weight");
            const double d = inv(s1.q) - inv(s2.q);
            if (d < 0.0) throw UnsupportedPair("need q <= r");
            return std::pow(harmonic_weighted(*s1.weight, m), d);
        }
    }
}

FundamentalRow fundamental(const SpaceSpec& spec, int m) {
    if (m < 1) throw InvalidParameter("fundamental needs m >= 1");
    FundamentalRow row;
    row.m = m;
    std::vector<double> ones(std::size_t(m), 1.0);
    row.lambda = space_norm(spec, ones);

    if (spec.kind == SpaceKind::Lp) {
        row.gamma = (spec.p == kInf) ? double(m) : std::pow(double(m), 1.0 - 1.0 / spec.p);
        if (spec.p < 1.0) row.gamma = 1.0;  // step search optimum for the quasi-norm range
    } else {
        // extreme-point search over decreasing steps g = c 1_k
        double best = 0.0;
        std::vector<double> step;
        step.reserve(std::size_t(m));
        for (int k = 1; k <= m; ++k) {
            step.push_back(1.0);
            best = std::max(best, double(k) / space_norm(spec, step));
        }
        row.gamma = best;
    }
    row.c = row.lambda * row.gamma / double(m);
    return row;
}

RegularityResult regularity_check(const std::vector<double>& s, RegularityKind kind, int r_cap) {
    RegularityResult res;
    const int len = int(s.size());
    for (int r = 2; r <= r_cap; ++r) {
        if (r > len) break;
        bool ok = true;
        for (int m = 1; m * r <= len; ++m) {
            const double srm = s[std::size_t(m) * r - 1];
            const double sm = s[std::size_t(m) - 1];
            const bool holds = (kind == RegularityKind::LRP) ? (srm >= 2.0 * sm) : (srm <= 0.5 * r * sm);
            if (!holds) {
                ok = false;
                res.violating_m = m;
                break;
            }
        }
        if (ok) {
            res.found = true;
            res.witness_r = r;
            return res;
        }
    }
    return res;
}

double essential_decrease_check(const std::vector<double>& phi, double q) {
    const int len = int(phi.size());
    if (len < 2) return 1.0;
    std::vector<double> x(static_cast<std::size_t>(len));
    for (int n = 1; n <= len; ++n) {
        if (!(phi[std::size_t(n) - 1] > 0.0)) throw InvalidParameter("essential_decrease_check needs positive phi");
        x[std::size_t(n) - 1] = std::pow(phi[std::size_t(n) - 1], q) / double(n);
    }
    // suffix maxima: sup_{n>m} x_n / x_m
    double best = 0.0;
    double suffix = x.back();
    for (int m = len - 1; m >= 1; --m) {
        best = std::max(best, suffix / x[std::size_t(m) - 1]);
        suffix = std::max(suffix, x[std::size_t(m) - 1]);
    }
    return best;
}

}  // namespace condlab

#include "condlab/weight_fourier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "condlab/errors.hpp"
#include "condlab/parallel.hpp"

namespace condlab {

WeightParams::WeightParams(double lam) : lambda(lam) {
    if (!(lambda > -1.0 && lambda < 1.0)) throw InvalidExponent(lambda);
}

int arrangement_frequency(Arrangement arr, int index, int raw_half_width) {
    switch (arr) {
        case Arrangement::RawInteger:
            return index - raw_half_width;
        case Arrangement::ComplexNatural:
            if (index == 0) return 0;
            return (index % 2 == 0) ? -(index / 2) : (index + 1) / 2;
        default:
            throw InvalidParameter("RealNatural carries cos/sin labels, not a single frequency");
    }
}

namespace {

constexpr double kPi = std::numbers::pi;

// 16-point Gauss-Legendre rule on [-1,1], nodes by Newton on P_16.
struct GaussRule {
    double x[16];
    double w[16];
    GaussRule() {
        const int n = 16;
        for (int i = 0; i < n / 2; ++i) {
            double t = std::cos(kPi * (i + 0.75) / (n + 0.5));
            double p0, p1, dp;
            for (int it = 0; it < 100; ++it) {
                p0 = 1.0;
                p1 = t;
                for (int k = 2; k <= n; ++k) {
                    const double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (t * p1 - p0) / (t * t - 1.0);
                const double dt = p1 / dp;
                t -= dt;
                if (std::fabs(dt) < 1e-16) break;
            }
            x[i] = -t;
            x[n - 1 - i] = t;
            w[i] = w[n - 1 - i] = 2.0 / ((1.0 - t * t) * dp * dp);
        }
    }
};

const GaussRule& rule() {
    static const GaussRule r;
    return r;
}

template <typename F>
double gauss_panel(const F& f, double a, double b) {
    const GaussRule& r = rule();
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < 16; ++i) s += r.w[i] * f(mid + half * r.x[i]);
    return half * s;
}

template <typename F>
double gauss_composite(const F& f, const std::vector<double>& brk) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < brk.size(); ++i)
        if (brk[i + 1] > brk[i]) s += gauss_panel(f, brk[i], brk[i + 1]);
    return s;
}

// Breakpoints on [0, hi]: >= 4 panels per oscillation period of cos(2 pi n t)
// plus a geometric refinement toward the algebraic endpoint at 0.
std::vector<double> oscillation_breakpoints(int n, double hi, int graded_levels = 40) {
    const double h = std::min(hi / 4.0, 1.0 / (4.0 * std::max(n, 1)));
    std::vector<double> brk;
    brk.push_back(0.0);
    for (int k = graded_levels; k >= 1; --k) {
        const double t = h * std::ldexp(1.0, -k);
        if (t > 0.0 && t < h) brk.push_back(t);
    }
    long panels = long(std::ceil(hi / h));
    for (long j = 1; j < panels; ++j) brk.push_back(h * double(j));
    brk.push_back(hi);
    return brk;
}

}  // namespace

double weight_fourier_coeff(const WeightParams& params, int n, double tol) {
    if (tol < 1e-13) throw InvalidParameter("weight_fourier_coeff tol below 1e-13");
    n = std::abs(n);
    const double lam = params.lambda;
    if (lam == 0.0) return n == 0 ? 1.0 : 0.0;

    if (lam > 0.0) {
        // integrand is continuous; graded panels absorb the derivative blowup at 0
        const auto f = [&](double t) { return std::pow(t, lam) * std::cos(2.0 * kPi * n * t); };
        return 2.0 * gauss_composite(f, oscillation_breakpoints(n, 0.5));
    }
    // lambda < 0: t = s^{1/(1+lambda)} turns t^lambda dt into ds/(1+lambda);
    // breakpoints are mapped so each panel still covers <= 1/4 period in t.
    const double p = 1.0 / (1.0 + lam);
    const auto g = [&](double s) { return std::cos(2.0 * kPi * n * std::pow(s, p)) / (1.0 + lam); };
    std::vector<double> brk = oscillation_breakpoints(n, 0.5);
    for (double& t : brk) t = std::pow(t, 1.0 + lam);
    return 2.0 * gauss_composite(g, brk);
}

std::vector<double> cosine_tail_table(double alpha, int nmax) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidExponent(-alpha);
    std::vector<double> a(std::size_t(nmax) + 1, 0.0);
    if (nmax < 1) return a;

    // first interval: x = s^{1/(1-alpha)}
    const double p = 1.0 / (1.0 - alpha);
    const auto g = [&](double s) { return std::cos(kPi * std::pow(s, p)) / (1.0 - alpha); };
    std::vector<double> brk;
    brk.push_back(0.0);
    for (int k = 40; k >= 1; --k) brk.push_back(0.25 * std::ldexp(1.0, -k));
    brk.push_back(0.25);
    brk.push_back(0.5);
    brk.push_back(0.75);
    brk.push_back(1.0);
    a[1] = gauss_composite(g, brk);

    for (int n = 2; n <= nmax; ++n) {
        const auto f = [&](double x) { return std::cos(kPi * x) * std::pow(x, -alpha); };
        double seg = 0.0;
        for (int j = 0; j < 4; ++j) seg += gauss_panel(f, n - 1 + 0.25 * j, n - 1 + 0.25 * (j + 1));
        a[n] = a[n - 1] + seg;
    }
    return a;
}

std::vector<double> sine_tail_table(double lambda, int nmax) {
    if (!(lambda > 0.0 && lambda < 1.0)) throw InvalidExponent(lambda);
    std::vector<double> t(std::size_t(nmax) + 1, 0.0);
    if (nmax < 1) return t;

    const double p = 1.0 / lambda;  // x = s^{1/lambda}
    const auto g = [&](double s) { return std::sin(kPi * std::pow(s, p)) / lambda; };
    std::vector<double> brk;
    brk.push_back(0.0);
    for (int k = 40; k >= 1; --k) brk.push_back(0.25 * std::ldexp(1.0, -k));
    brk.push_back(0.25);
    brk.push_back(0.5);
    brk.push_back(0.75);
    brk.push_back(1.0);
    t[1] = gauss_composite(g, brk);

    for (int n = 2; n <= nmax; ++n) {
        const auto f = [&](double x) { return std::sin(kPi * x) * std::pow(x, lambda - 1.0); };
        double seg = 0.0;
        for (int j = 0; j < 4; ++j) seg += gauss_panel(f, n - 1 + 0.25 * j, n - 1 + 0.25 * (j + 1));
        t[n] = t[n - 1] + seg;
    }
    return t;
}

double beta_function(double a, double b) {
    return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
}

AlternatingTail alternating_tail(double alpha, int n) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidExponent(alpha);
    if (n < 1) throw InvalidParameter("alternating_tail needs n >= 1");
    AlternatingTail out;
    out.alpha = alpha;
    out.n = n;
    out.cos_tail = cosine_tail_table(alpha, n)[n];

    double s = 0.0;
    for (int k = 1; k <= n; ++k)
        s += std::pow(double(k), -(1.0 + alpha) / 2.0) * std::pow(double(1 + n - k), alpha - 1.0);
    out.conv_sum = s;
    out.beta_bound = beta_function((1.0 - alpha) / 2.0, alpha) * std::pow(double(n), -(1.0 - alpha) / 2.0);
    if (n >= 2) {
        out.remainder = -std::pow(double(n), alpha - 1.0) - std::pow(double(n), -(1.0 + alpha) / 2.0) +
                        (2.0 / (1.0 - alpha)) * std::pow(double(n - 1), alpha - 1.0) +
                        (1.0 / alpha) * std::pow(double(n - 1), -(1.0 + alpha) / 2.0);
    }
    return out;
}

WeightFourierTable WeightFourierTable::build(const WeightParams& params, int max_index, double tol) {
    WeightFourierTable t;
    t.params_ = params;
    t.tol_ = tol;
    t.coeffs_.assign(std::size_t(max_index) + 1, 0.0);

    const double lam = params.lambda;
    if (lam == 0.0) {
        t.coeffs_[0] = 1.0;
        return t;
    }
    if (lam < 0.0) {
        const double alpha = -lam;
        const std::vector<double> a = cosine_tail_table(alpha, max_index);
        t.coeffs_[0] = std::pow(2.0, alpha) / (1.0 - alpha);
        for (int n = 1; n <= max_index; ++n)
            t.coeffs_[n] = std::pow(2.0, alpha) * std::pow(double(n), alpha - 1.0) * a[n];
        return t;
    }
    t.coeffs_[0] = std::pow(2.0, -lam) / (1.0 + lam);
    parallel_for(1, long(max_index) + 1,
                 [&](long n) { t.coeffs_[std::size_t(n)] = weight_fourier_coeff(params, int(n), tol); });
    return t;
}

namespace {

std::string cache_key(const WeightParams& p, int max_index, double tol) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "wcoef_%.17g_N%d_tol%.17g.csv", p.lambda, max_index, tol);
    std::string s(buf);
    for (char& c : s)
        if (c == '-')
            c = 'm';
        else if (c == '.')
            c = 'p';
        else if (c == '+')
            c = 'q';
    return s;
}

}  // namespace

WeightFourierTable WeightFourierTable::build_cached(const WeightParams& params, int max_index, double tol,
                                                    const std::string& cache_dir) {
    if (cache_dir.empty()) return build(params, max_index, tol);
    std::error_code ec;
    std::filesystem::create_directories(cache_dir, ec);
    const std::string path = cache_dir + "/" + cache_key(params, max_index, tol);
    if (std::filesystem::exists(path)) {
        try {
            return load(path);
        } catch (const std::exception&) {
            // fall through and rebuild
        }
    }
    WeightFourierTable t = build(params, max_index, tol);
    t.save(path);
    return t;
}

void WeightFourierTable::save(const std::string& path) const {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw InvalidParameter("cannot open cache file " + tmp);
        char buf[96];
        std::snprintf(buf, sizeof buf, "%.17g,%d,%.17g\n", params_.lambda, max_index(), tol_);
        out << buf;
        for (int n = 0; n <= max_index(); ++n) {
            std::snprintf(buf, sizeof buf, "%d,%.17g\n", n, coeffs_[n]);
            out << buf;
        }
    }
    std::filesystem::rename(tmp, path);
}

WeightFourierTable WeightFourierTable::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidParameter("cannot read cache file " + path);
    std::string line;
    if (!std::getline(in, line)) throw InvalidParameter("empty cache file " + path);
    double lam = 0.0, tol = 0.0;
    int nmax = 0;
    if (std::sscanf(line.c_str(), "%lf,%d,%lf", &lam, &nmax, &tol) != 3)
        throw InvalidParameter("bad cache header in " + path);
    WeightFourierTable t;
    t.params_ = WeightParams(lam);
    t.tol_ = tol;
    t.coeffs_.assign(std::size_t(nmax) + 1, 0.0);
    int seen = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        int n = 0;
        double v = 0.0;
        if (std::sscanf(line.c_str(), "%d,%lf", &n, &v) != 2) throw InvalidParameter("bad cache row in " + path);
        if (n < 0 || n > nmax) throw InvalidParameter("cache row index out of range in " + path);
        t.coeffs_[n] = v;
        ++seen;
    }
    if (seen != nmax + 1) throw InvalidParameter("truncated cache file " + path);
    return t;
}

namespace {

struct RealLabel {
    bool is_sin;
    int k;  // frequency; k = 0 only for the constant (is_sin = false)
};

RealLabel real_label(int index) {
    if (index == 0) return {false, 0};
    const int k = (index + 1) / 2;
    return {index % 2 == 0, k};
}

double real_gram_entry(const WeightFourierTable& w, int i, int j) {
    const RealLabel a = real_label(i);
    const RealLabel b = real_label(j);
    if (a.is_sin != b.is_sin) return 0.0;
    if (a.is_sin) return 0.5 * (w.at(a.k - b.k) - w.at(a.k + b.k));
    if (a.k == 0 && b.k == 0) return w.at(0);
    if (a.k == 0 || b.k == 0) return w.at(a.k + b.k);  // one factor constant
    return 0.5 * (w.at(a.k - b.k) + w.at(a.k + b.k));
}

int required_reach(Arrangement arr, int n) {
    switch (arr) {
        case Arrangement::RawInteger:
            return n - 1;  // frequencies -m..m, max difference 2m = n-1
        case Arrangement::ComplexNatural: {
            int lo = 0, hi = 0;
            for (int i = 0; i < n; ++i) {
                const int f = arrangement_frequency(arr, i);
                lo = std::min(lo, f);
                hi = std::max(hi, f);
            }
            return hi - lo;
        }
        case Arrangement::RealNatural:
            return n;  // frequency sums reach 2*ceil((n-1)/2) <= n
    }
    return n;
}

}  // namespace

SymMatrix gram_matrix(const WeightFourierTable& table, int n, Arrangement arr) {
    if (n < 1) throw InvalidParameter("gram_matrix order must be >= 1");
    if (arr == Arrangement::RawInteger && n % 2 == 0)
        throw InvalidParameter("RawInteger arrangement needs odd order");
    if (table.max_index() < required_reach(arr, n))
        throw InvalidParameter("weight table too short for requested Gram");

    SymMatrix g(n);
    if (arr == Arrangement::RealNatural) {
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) g.set_sym(i, j, real_gram_entry(table, i, j));
        return g;
    }
    const int half = (arr == Arrangement::RawInteger) ? (n - 1) / 2 : 0;
    std::vector<int> freq(n);
    for (int i = 0; i < n; ++i) freq[i] = arrangement_frequency(arr, i, half);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) g.set_sym(i, j, table.at(freq[j] - freq[i]));
    return g;
}

double h_norm(const WeightFourierTable& table, Arrangement arr, const std::vector<double>& coeffs) {
    const int n = int(coeffs.size());
    if (n == 0) return 0.0;
    if (table.max_index() < required_reach(arr, n))
        throw InvalidParameter("weight table too short for h_norm");

    double total = 0.0;
    if (arr == Arrangement::RealNatural) {
        for (int i = 0; i < n; ++i) {
            if (coeffs[i] == 0.0) continue;
            double row = 0.0;
            for (int j = 0; j < n; ++j) row += real_gram_entry(table, i, j) * coeffs[j];
            total += coeffs[i] * row;
        }
    } else {
        const int half = (arr == Arrangement::RawInteger) ? (n - 1) / 2 : 0;
        std::vector<int> freq(n);
        for (int i = 0; i < n; ++i) freq[i] = arrangement_frequency(arr, i, half);
        for (int i = 0; i < n; ++i) {
            if (coeffs[i] == 0.0) continue;
            double row = 0.0;
            for (int j = 0; j < n; ++j) row += table.at(freq[j] - freq[i]) * coeffs[j];
            total += coeffs[i] * row;
        }
    }
    return std::sqrt(std::max(total, 0.0));
}

double dirichlet_norm(const WeightFourierTable& table, int m) {
    if (m < 0) throw InvalidParameter("dirichlet_norm needs m >= 0");
    if (table.max_index() < 2 * m) throw InvalidParameter("weight table too short for dirichlet_norm");
    double s = double(2 * m + 1) * table.at(0);
    for (int j = 1; j <= 2 * m; ++j) s += 2.0 * double(2 * m + 1 - j) * table.at(j);
    return std::sqrt(std::max(s, 0.0));
}

double fm_norm(const WeightFourierTable& table, int m) {
    if (m < 1) throw InvalidParameter("fm_norm needs m >= 1");
    if (table.params().lambda >= 0.0) throw InvalidParameter("fm_norm wants a table for negative lambda");
    if (table.max_index() < m - 1) throw InvalidParameter("weight table too short for fm_norm");
    const double e = -(1.0 + table.params().alpha()) / 2.0;
    std::vector<double> c(std::size_t(m) + 1, 0.0);
    for (int k = 1; k <= m; ++k) c[k] = std::pow(double(k), e);

    double s = 0.0;
    for (int k = 1; k <= m; ++k) s += c[k] * c[k];
    s *= table.at(0);
    for (int d = 1; d < m; ++d) {
        double inner = 0.0;
        for (int k = 1; k + d <= m; ++k) inner += c[k] * c[k + d];
        s += 2.0 * table.at(d) * inner;
    }
    return std::sqrt(std::max(s, 0.0));
}

RealComplexTransform real_complex_transform(int n) {
    if (n < 1 || n % 2 == 0) throw DimensionMismatch("real_complex_transform needs odd order");
    RealComplexTransform t{ComplexMatrix(n), ComplexMatrix(n)};
    const std::complex<double> i(0.0, 1.0);
    t.to_real.at(0, 0) = 1.0;
    t.from_real.at(0, 0) = 1.0;
    for (int k = 1; 2 * k < n + 1 && 2 * k - 1 < n; ++k) {
        const int c = 2 * k - 1;  // cos slot
        const int s = 2 * k;      // sin slot
        if (s >= n) break;
        t.to_real.at(c, c) = 0.5;
        t.to_real.at(s, c) = 0.5;
        t.to_real.at(c, s) = -0.5 * i;
        t.to_real.at(s, s) = 0.5 * i;
        t.from_real.at(c, c) = 1.0;
        t.from_real.at(s, c) = i;
        t.from_real.at(c, s) = 1.0;
        t.from_real.at(s, s) = -i;
    }
    return t;
}

SymMatrix conjugate_gram(const SymMatrix& gram_natural, const ComplexMatrix& c, double tol) {
    const int n = gram_natural.order();
    if (c.n != n) throw DimensionMismatch("conjugate_gram operands");
    SymMatrix out(n);
    for (int j = 0; j < n; ++j) {
        for (int k = j; k < n; ++k) {
            std::complex<double> v(0.0, 0.0);
            for (int a = 0; a < n; ++a) {
                if (c.at(a, j) == std::complex<double>(0.0, 0.0)) continue;
                std::complex<double> row(0.0, 0.0);
                for (int b = 0; b < n; ++b) row += gram_natural.at(a, b) * std::conj(c.at(b, k));
                v += c.at(a, j) * row;
            }
            if (std::fabs(v.imag()) > tol) throw InvalidParameter("conjugate_gram produced a complex entry");
            out.set_sym(j, k, v.real());
        }
    }
    return out;
}

}  // namespace condlab

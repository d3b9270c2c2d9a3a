#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "condlab/errors.hpp"
#include "condlab/linalg.hpp"
#include "condlab/weight_fourier.hpp"

using namespace condlab;

namespace {

// independent quadrature oracle: composite 10-point Gauss on a dyadically
// graded mesh, nodes/weights hardcoded (classic values)
const double kNodes10[10] = {-0.9739065285171717, -0.8650633666889845, -0.6794095682990244,
                             -0.4333953941292472, -0.14887433898163122, 0.14887433898163122,
                             0.4333953941292472,  0.6794095682990244,  0.8650633666889845,
                             0.9739065285171717};
const double kWeights10[10] = {0.06667134430868814, 0.1494513491505806, 0.21908636251598204,
                               0.26926671930999635, 0.29552422471475287, 0.29552422471475287,
                               0.26926671930999635, 0.21908636251598204, 0.1494513491505806,
                               0.06667134430868814};

template <typename F>
double oracle_integral_0_half(const F& f, int refinements = 2000) {
    // graded panels [h_{k+1}, h_k] with h_k = 0.5 * 2^-k, plus uniform split of each
    double total = 0.0;
    double hi = 0.5;
    for (int k = 0; k < 60; ++k) {
        const double lo = hi * 0.5;
        const int pieces = std::max(1, refinements >> std::max(0, k - 4));
        for (int p = 0; p < pieces; ++p) {
            const double a = lo + (hi - lo) * p / pieces;
            const double b = lo + (hi - lo) * (p + 1) / pieces;
            const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
            double s = 0.0;
            for (int i = 0; i < 10; ++i) s += kWeights10[i] * f(mid + half * kNodes10[i]);
            total += half * s;
        }
        hi = lo;
        if (hi < 1e-40) break;
    }
    return total;
}

}  // namespace

TEST_CASE("weight params validity") {
    CHECK_THROWS_AS(WeightParams(1.0), InvalidExponent);
    CHECK_THROWS_AS(WeightParams(-1.0), InvalidExponent);
    const WeightParams p(-0.5);
    CHECK(p.alpha() == 0.5);
    CHECK(p.q_alpha() == doctest::Approx(4.0 / 3.0));
    CHECK(p.r_alpha() == doctest::Approx(4.0));
    CHECK(1.0 / p.q_alpha() + 1.0 / p.r_alpha() == doctest::Approx(1.0));
}

TEST_CASE("coefficient closed form at n = 0") {
    // 2 int_0^{1/2} t^lambda dt = 2^{-lambda}/(1+lambda)
    for (double lam : {-0.75, -0.5, -0.25, 0.25, 0.5, 0.75}) {
        const double expect = std::pow(2.0, -lam) / (1.0 + lam);
        CHECK(weight_fourier_coeff(WeightParams(lam), 0) == doctest::Approx(expect).epsilon(1e-12));
    }
    CHECK(weight_fourier_coeff(WeightParams(-0.5), 0) == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("lambda zero is orthonormal") {
    const WeightParams p(0.0);
    CHECK(weight_fourier_coeff(p, 0) == 1.0);
    CHECK(weight_fourier_coeff(p, 3) == 0.0);
    const auto t = WeightFourierTable::build(p, 16);
    CHECK(t.at(0) == 1.0);
    CHECK(t.at(7) == 0.0);
    CHECK(t.at(-5) == t.at(5));
}

TEST_CASE("coefficient against the independent graded-mesh oracle") {
    for (double lam : {-0.6, -0.5, 0.5}) {
        for (int n : {1, 5, 17}) {
            const auto f = [&](double t) { return std::pow(t, lam) * std::cos(2.0 * std::numbers::pi * n * t); };
            const double expect = 2.0 * oracle_integral_0_half(f);
            CHECK(weight_fourier_coeff(WeightParams(lam), n) == doctest::Approx(expect).epsilon(1e-9));
        }
    }
}

TEST_CASE("two routes to negative-weight coefficients agree") {
    const double alpha = 0.5;
    const auto table = WeightFourierTable::build(WeightParams(-alpha), 1024);
    for (int n : {1, 2, 3, 16, 100, 511, 1024}) {
        const double direct = weight_fourier_coeff(WeightParams(-alpha), n);
        CHECK(std::fabs(direct - table.at(n)) <= 1e-8 * std::fabs(direct));
    }
}

TEST_CASE("independent sine-tail route for positive lambda") {
    const double lam = 0.5;
    const auto t = sine_tail_table(lam, 256);
    for (int n : {1, 7, 64, 256}) {
        const double via_tail = -lam * t[std::size_t(n)] /
                                (std::pow(2.0, lam) * std::numbers::pi * std::pow(double(n), 1.0 + lam));
        const double direct = weight_fourier_coeff(WeightParams(lam), n);
        CHECK(direct == doctest::Approx(via_tail).epsilon(1e-9));
    }
}

TEST_CASE("positivity and tail stabilization of hat w_{-alpha}") {
    const auto table = WeightFourierTable::build(WeightParams(-0.5), 1000);
    for (int n = 0; n <= 1000; ++n) CHECK(table.at(n) > 0.0);
    const double a = table.at(64) * std::sqrt(65.0);
    const double b = table.at(32) * std::sqrt(33.0);
    CHECK(std::fabs(a - b) <= 0.05 * std::fabs(b));
}

TEST_CASE("gram matrices") {
    const auto id_table = WeightFourierTable::build(WeightParams(0.0), 32);
    SUBCASE("lambda 0 complex gram is the identity") {
        const SymMatrix g = gram_matrix(id_table, 9, Arrangement::ComplexNatural);
        for (int i = 0; i < 9; ++i)
            for (int j = 0; j < 9; ++j) CHECK(g.at(i, j) == doctest::Approx(i == j ? 1.0 : 0.0));
    }
    SUBCASE("lambda 0 real gram is diag(1, 1/2, 1/2, ...)") {
        const SymMatrix g = gram_matrix(id_table, 7, Arrangement::RealNatural);
        CHECK(g.at(0, 0) == doctest::Approx(1.0));
        for (int i = 1; i < 7; ++i) {
            CHECK(g.at(i, i) == doctest::Approx(0.5));
            for (int j = 0; j < i; ++j) CHECK(g.at(i, j) == doctest::Approx(0.0));
        }
    }
    const auto table = WeightFourierTable::build(WeightParams(-0.5), 64);
    SUBCASE("raw arrangement is Toeplitz with the stated diagonal") {
        const SymMatrix g = gram_matrix(table, 3, Arrangement::RawInteger);
        CHECK(g.at(0, 0) == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-10));
        CHECK(g.at(0, 1) == doctest::Approx(g.at(1, 2)));
        CHECK(g.at(0, 2) == doctest::Approx(table.at(2)));
        CHECK_THROWS_AS(gram_matrix(table, 4, Arrangement::RawInteger), InvalidParameter);
    }
    SUBCASE("real gram equals the conjugated natural gram") {
        const int n = 9;
        const SymMatrix gn = gram_matrix(table, n, Arrangement::ComplexNatural);
        const auto tr = real_complex_transform(n);
        const SymMatrix gr = conjugate_gram(gn, tr.to_real);
        const SymMatrix direct = gram_matrix(table, n, Arrangement::RealNatural);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) CHECK(gr.at(i, j) == doctest::Approx(direct.at(i, j)).epsilon(1e-11));
    }
    SUBCASE("positive definiteness near the exponent boundary") {
        for (double lam : {-0.9, 0.9}) {
            const auto t = WeightFourierTable::build(WeightParams(lam), 520);
            CHECK_NOTHROW(cholesky(gram_matrix(t, 512, Arrangement::ComplexNatural)));
        }
    }
}

TEST_CASE("h_norm") {
    const auto id_table = WeightFourierTable::build(WeightParams(0.0), 32);
    std::mt19937_64 rng(4);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> a(9);
    for (auto& v : a) v = gauss(rng);
    double l2 = 0.0;
    for (double v : a) l2 += v * v;
    CHECK(h_norm(id_table, Arrangement::ComplexNatural, a) == doctest::Approx(std::sqrt(l2)).epsilon(1e-12));

    const auto table = WeightFourierTable::build(WeightParams(-0.5), 64);
    // the norm of tau_n does not depend on n
    for (int i = 0; i < 8; ++i) {
        std::vector<double> e(std::size_t(i) + 1, 0.0);
        e[std::size_t(i)] = 1.0;
        CHECK(h_norm(table, Arrangement::ComplexNatural, e) == doctest::Approx(std::sqrt(table.at(0))).epsilon(1e-12));
    }
    // ||D_1||^2 = 3 w(0) + 4 w(1) + 2 w(2): expand the 3x3 Toeplitz form by hand
    const double d1 = h_norm(table, Arrangement::RawInteger, {1.0, 1.0, 1.0});
    CHECK(d1 * d1 == doctest::Approx(3 * table.at(0) + 4 * table.at(1) + 2 * table.at(2)).epsilon(1e-12));
    CHECK(dirichlet_norm(table, 1) == doctest::Approx(d1).epsilon(1e-12));
}

TEST_CASE("h_norm matches an independent integral oracle on trig polynomials") {
    const double lam = -0.5;
    const auto table = WeightFourierTable::build(WeightParams(lam), 40);
    std::mt19937_64 rng(9);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<double> a(9);
        for (auto& v : a) v = gauss(rng);
        // p(t) = sum a_i phi_i(t) in the real arrangement; integrate w |p|^2
        const auto p = [&](double t) {
            double s = a[0];
            for (int k = 1; 2 * k < 10; ++k) {
                if (2 * k - 1 < 9) s += a[std::size_t(2 * k - 1)] * std::cos(2 * std::numbers::pi * k * t);
                if (2 * k < 9) s += a[std::size_t(2 * k)] * std::sin(2 * std::numbers::pi * k * t);
            }
            return s;
        };
        const auto f = [&](double t) { return std::pow(t, lam) * (p(t) * p(t) + p(-t) * p(-t)); };
        const double expect = std::sqrt(oracle_integral_0_half(f, 400));
        CHECK(h_norm(table, Arrangement::RealNatural, a) == doctest::Approx(expect).epsilon(1e-8));
    }
}

TEST_CASE("dirichlet norm for the flat weight") {
    const auto t = WeightFourierTable::build(WeightParams(0.0), 64);
    for (int m : {0, 1, 5, 30}) CHECK(dirichlet_norm(t, m) == doctest::Approx(std::sqrt(2.0 * m + 1.0)).epsilon(1e-13));
}

TEST_CASE("fm_norm basics") {
    const auto table = WeightFourierTable::build(WeightParams(-0.5), 16);
    CHECK(fm_norm(table, 1) == doctest::Approx(std::sqrt(table.at(0))).epsilon(1e-12));
    // m = 2 by hand: c = (1, 2^{-3/4}), |f|^2 = w0 (c1^2 + c2^2) + 2 w1 c1 c2
    const double c2 = std::pow(2.0, -0.75);
    const double expect = table.at(0) * (1.0 + c2 * c2) + 2.0 * table.at(1) * c2;
    CHECK(fm_norm(table, 2) == doctest::Approx(std::sqrt(expect)).epsilon(1e-12));
}

TEST_CASE("alternating tails") {
    const double alpha = 0.5;
    SUBCASE("cosine tail positivity") {
        const auto a = cosine_tail_table(alpha, 1000);
        for (int n = 1; n <= 1000; ++n) CHECK(a[std::size_t(n)] > 0.0);
    }
    SUBCASE("convolution band and remainder decay") {
        for (int n : {2, 3, 10, 100, 1000}) {
            const auto t = alternating_tail(alpha, n);
            CHECK(t.conv_sum <= t.beta_bound + 1e-12);
            CHECK(t.beta_bound <= t.conv_sum + t.remainder + 1e-12);
        }
        const auto t100 = alternating_tail(alpha, 100);
        const auto t10000 = alternating_tail(alpha, 10000);
        const double r100 = std::pow(100.0, (1.0 - alpha) / 2.0) * t100.remainder;
        const double r10000 = std::pow(10000.0, (1.0 - alpha) / 2.0) * t10000.remainder;
        CHECK(r10000 <= 1e-2 * r100);
    }
    SUBCASE("scaled convolution sum stabilizes to the Beta constant") {
        const double beta = beta_function((1.0 - alpha) / 2.0, alpha);
        const auto t1 = alternating_tail(alpha, 1 << 10);
        const auto t2 = alternating_tail(alpha, 1 << 12);
        const double v1 = t1.conv_sum * std::pow(double(1 << 10), (1.0 - alpha) / 2.0);
        const double v2 = t2.conv_sum * std::pow(double(1 << 12), (1.0 - alpha) / 2.0);
        CHECK(std::fabs(v1 - v2) <= 0.02 * std::fabs(v2));
        CHECK(std::fabs(v2 - beta) <= 0.05 * beta);
    }
    SUBCASE("beta function sanity") {
        CHECK(beta_function(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(beta_function(0.5, 0.5) == doctest::Approx(std::numbers::pi).epsilon(1e-12));
        CHECK(beta_function(2.0, 3.0) == doctest::Approx(1.0 / 12.0).epsilon(1e-12));
    }
}

TEST_CASE("real complex transform") {
    CHECK_THROWS_AS(real_complex_transform(4), DimensionMismatch);
    const auto t1 = real_complex_transform(1);
    CHECK(t1.to_real.at(0, 0) == std::complex<double>(1.0, 0.0));

    const int n = 9;
    const auto tr = real_complex_transform(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::complex<double> s(0.0, 0.0);
            for (int k = 0; k < n; ++k) s += tr.to_real.at(i, k) * tr.from_real.at(k, j);
            CHECK(std::abs(s - (i == j ? 1.0 : 0.0)) <= 1e-14);
        }
    // cosine norm in the unweighted space through the transform
    const auto id_table = WeightFourierTable::build(WeightParams(0.0), 16);
    const SymMatrix gr = conjugate_gram(gram_matrix(id_table, n, Arrangement::ComplexNatural), tr.to_real);
    CHECK(gr.at(1, 1) == doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("table cache round trip") {
    const auto t = WeightFourierTable::build(WeightParams(-0.25), 50, 1e-10);
    const std::string path = "/tmp/condlab_test_table.csv";
    t.save(path);
    const auto u = WeightFourierTable::load(path);
    CHECK(u.max_index() == 50);
    CHECK(u.params().lambda == t.params().lambda);
    for (int i = 0; i <= 50; ++i) CHECK(u.at(i) == t.at(i));  // bit exact
}

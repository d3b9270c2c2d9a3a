#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "condlab/errors.hpp"
#include "condlab/linalg.hpp"

using namespace condlab;

namespace {

SymMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    SymMatrix m(int(rows.size()));
    int i = 0;
    for (const auto& r : rows) {
        int j = 0;
        for (double v : r) m.at(i, j++) = v;
        ++i;
    }
    return m;
}

SymMatrix random_spd(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    SymMatrix b(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b.at(i, j) = gauss(rng);
    SymMatrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            double s = 0.0;
            for (int k = 0; k < n; ++k) s += b.at(k, i) * b.at(k, j);
            a.set_sym(i, j, s + (i == j ? 0.5 * n : 0.0));
        }
    return a;
}

// roots of det(M - t G) = 0 for 2x2, by the quadratic formula
double pencil_2x2_max_root(const SymMatrix& m, const SymMatrix& g) {
    const double a = g.at(0, 0) * g.at(1, 1) - g.at(0, 1) * g.at(1, 0);
    const double b = -(m.at(0, 0) * g.at(1, 1) + m.at(1, 1) * g.at(0, 0) - m.at(0, 1) * g.at(1, 0) -
                       m.at(1, 0) * g.at(0, 1));
    const double c = m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
    const double disc = std::sqrt(b * b - 4.0 * a * c);
    return std::max((-b + disc) / (2.0 * a), (-b - disc) / (2.0 * a));
}

}  // namespace

TEST_CASE("cholesky identity") {
    const SymMatrix l = cholesky(SymMatrix::identity(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(l.at(i, j) == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-15));
}

TEST_CASE("cholesky hand example") {
    const SymMatrix a = from_rows({{4, 2}, {2, 5}});
    const SymMatrix l = cholesky(a);
    CHECK(l.at(0, 0) == doctest::Approx(2.0));
    CHECK(l.at(1, 0) == doctest::Approx(1.0));
    CHECK(l.at(1, 1) == doctest::Approx(2.0));
    CHECK(l.at(0, 1) == 0.0);
    // reconstruction residual
    double res = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            double v = 0.0;
            for (int k = 0; k < 2; ++k) v += l.at(i, k) * l.at(j, k);
            res = std::max(res, std::fabs(v - a.at(i, j)));
        }
    CHECK(res <= 1e-12 * a.frobenius());
}

TEST_CASE("cholesky rejects indefinite input") {
    // eigenvalues of [[1,2],[2,1]] are 3 and -1
    CHECK_THROWS_AS(cholesky(from_rows({{1, 2}, {2, 1}})), NotPositiveDefinite);
}

TEST_CASE("cholesky residual on random SPD up to order 64") {
    std::mt19937_64 rng(42);
    for (int n : {2, 7, 16, 33, 64}) {
        const SymMatrix a = random_spd(n, rng);
        const SymMatrix l = cholesky(a);
        double res = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                double v = 0.0;
                for (int k = 0; k <= std::min(i, j); ++k) v += l.at(i, k) * l.at(j, k);
                res += (v - a.at(i, j)) * (v - a.at(i, j));
            }
        CHECK(std::sqrt(res) <= 1e-12 * a.frobenius());
    }
}

TEST_CASE("sym_eig on diagonal and identity") {
    const auto r = sym_eig(from_rows({{3, 0, 0}, {0, 1, 0}, {0, 0, 2}}));
    CHECK(r.values[0] == doctest::Approx(3.0));
    CHECK(r.values[1] == doctest::Approx(2.0));
    CHECK(r.values[2] == doctest::Approx(1.0));
    for (double v : sym_eig_values(SymMatrix::identity(5))) CHECK(v == doctest::Approx(1.0));
}

TEST_CASE("sym_eig 2x2 exchange matrix") {
    const auto r = sym_eig(from_rows({{0, 1}, {1, 0}}));
    CHECK(r.values[0] == doctest::Approx(1.0));
    CHECK(r.values[1] == doctest::Approx(-1.0));
    const double s = 1.0 / std::sqrt(2.0);
    // eigenvectors up to sign
    CHECK(std::fabs(r.vectors.at(0, 0) * r.vectors.at(1, 0)) == doctest::Approx(s * s));
    CHECK(r.vectors.at(0, 1) * r.vectors.at(1, 1) == doctest::Approx(-s * s));
}

TEST_CASE("sym_eig matches characteristic polynomial on integer matrices") {
    // 2x2: roots of t^2 - tr t + det
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        SymMatrix a(2);
        a.at(0, 0) = double(int(rng() % 11) - 5);
        a.at(1, 1) = double(int(rng() % 11) - 5);
        a.set_sym(0, 1, double(int(rng() % 11) - 5));
        const double tr = a.at(0, 0) + a.at(1, 1);
        const double det = a.at(0, 0) * a.at(1, 1) - a.at(0, 1) * a.at(0, 1);
        const double disc = std::sqrt(tr * tr - 4.0 * det);
        const auto v = sym_eig_values(a);
        CHECK(v[0] == doctest::Approx(0.5 * (tr + disc)).epsilon(1e-10));
        CHECK(v[1] == doctest::Approx(0.5 * (tr - disc)).epsilon(1e-10));
    }
    // 3x3: compare elementary symmetric functions of the computed spectrum
    for (int trial = 0; trial < 50; ++trial) {
        SymMatrix a(3);
        for (int i = 0; i < 3; ++i) a.at(i, i) = double(int(rng() % 7) - 3);
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) a.set_sym(i, j, double(int(rng() % 7) - 3));
        const auto v = sym_eig_values(a);
        const double e1 = v[0] + v[1] + v[2];
        const double e2 = v[0] * v[1] + v[0] * v[2] + v[1] * v[2];
        const double e3 = v[0] * v[1] * v[2];
        const double tr = a.at(0, 0) + a.at(1, 1) + a.at(2, 2);
        double minors = 0.0;
        minors += a.at(0, 0) * a.at(1, 1) - a.at(0, 1) * a.at(0, 1);
        minors += a.at(0, 0) * a.at(2, 2) - a.at(0, 2) * a.at(0, 2);
        minors += a.at(1, 1) * a.at(2, 2) - a.at(1, 2) * a.at(1, 2);
        const double det = a.at(0, 0) * (a.at(1, 1) * a.at(2, 2) - a.at(1, 2) * a.at(1, 2)) -
                           a.at(0, 1) * (a.at(0, 1) * a.at(2, 2) - a.at(1, 2) * a.at(0, 2)) +
                           a.at(0, 2) * (a.at(0, 1) * a.at(1, 2) - a.at(1, 1) * a.at(0, 2));
        CHECK(e1 == doctest::Approx(tr).epsilon(1e-10));
        CHECK(e2 == doctest::Approx(minors).epsilon(1e-9));
        CHECK(e3 == doctest::Approx(det).epsilon(1e-9));
    }
}

TEST_CASE("sym_eig residual and orthonormality on random input") {
    std::mt19937_64 rng(3);
    const SymMatrix a = random_spd(24, rng);
    const auto r = sym_eig(a);
    const int n = a.order();
    for (int k = 0; k < n; ++k) {
        double res = 0.0;
        for (int i = 0; i < n; ++i) {
            double av = 0.0;
            for (int j = 0; j < n; ++j) av += a.at(i, j) * r.vectors.at(j, k);
            res += (av - r.values[k] * r.vectors.at(i, k)) * (av - r.values[k] * r.vectors.at(i, k));
        }
        CHECK(std::sqrt(res) <= 1e-10 * a.frobenius());
    }
    for (int k = 0; k < n; ++k)
        for (int l = k; l < n; ++l) {
            double dot = 0.0;
            for (int i = 0; i < n; ++i) dot += r.vectors.at(i, k) * r.vectors.at(i, l);
            CHECK(std::fabs(dot - (k == l ? 1.0 : 0.0)) <= 1e-12);
        }
}

TEST_CASE("gen_sym_eig_max hand pencil and sampling bound") {
    const SymMatrix m = from_rows({{1, 0}, {0, 0}});
    const SymMatrix g = from_rows({{1, 0.5}, {0.5, 1}});
    const double lam = gen_sym_eig_max(m, g);
    CHECK(lam == doctest::Approx(4.0 / 3.0).epsilon(1e-9));
    CHECK(lam == doctest::Approx(pencil_2x2_max_root(m, g)).epsilon(1e-9));

    // dense sampling over the unit G-sphere is a lower bound
    std::mt19937_64 rng(11);
    std::normal_distribution<double> gauss(0.0, 1.0);
    double best = 0.0;
    for (int it = 0; it < 10000; ++it) {
        std::vector<double> v{gauss(rng), gauss(rng)};
        const double gn = quadratic_form(g, v);
        best = std::max(best, quadratic_form(m, v) / gn);
    }
    CHECK(best <= lam + 1e-9);
    CHECK(best >= lam - 1e-3);
}

TEST_CASE("gen_sym_eig_max trivial cases") {
    std::mt19937_64 rng(5);
    const SymMatrix g = random_spd(6, rng);
    CHECK(gen_sym_eig_max(g, g) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(gen_sym_eig_max(SymMatrix(6), g) == doctest::Approx(0.0));
    CHECK_THROWS_AS(gen_sym_eig_max(g, SymMatrix(6)), NotPositiveDefinite);
}

TEST_CASE("solve_spd") {
    const SymMatrix a = from_rows({{4, 2}, {2, 5}});
    // hand elimination: x2 = (9 - 2 x1)/5 into 4 x1 + 2 x2 = 8 gives
    // (16/5) x1 = 8 - 18/5, so x1 = 11/8 and x2 = 5/4
    const auto x = solve_spd(a, {8, 9});
    CHECK(x[0] == doctest::Approx(11.0 / 8.0).epsilon(1e-12));
    CHECK(x[1] == doctest::Approx(5.0 / 4.0).epsilon(1e-12));

    const auto y = solve_spd(SymMatrix::identity(3), {1, 2, 3});
    CHECK(y[0] == 1.0);
    CHECK(y[2] == 3.0);

    SymMatrix d(2);
    d.at(0, 0) = 2;
    d.at(1, 1) = 4;
    const auto z = solve_spd(d, {2, 4});
    CHECK(z[0] == doctest::Approx(1.0));
    CHECK(z[1] == doctest::Approx(1.0));

    std::mt19937_64 rng(17);
    const SymMatrix big = random_spd(40, rng);
    std::vector<double> b(40);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (auto& v : b) v = gauss(rng);
    const auto sol = solve_spd(big, b);
    double rnorm = 0.0, bnorm = 0.0;
    for (int i = 0; i < 40; ++i) {
        double av = 0.0;
        for (int j = 0; j < 40; ++j) av += big.at(i, j) * sol[std::size_t(j)];
        rnorm += (av - b[std::size_t(i)]) * (av - b[std::size_t(i)]);
        bnorm += b[std::size_t(i)] * b[std::size_t(i)];
    }
    CHECK(std::sqrt(rnorm) <= 1e-10 * std::sqrt(bnorm));
}

TEST_CASE("hermitian embedding doubles the spectrum") {
    // [[2, i], [-i, 2]] has eigenvalues 1 and 3
    SymMatrix re = from_rows({{2, 0}, {0, 2}});
    SymMatrix im(2);
    im.at(0, 1) = 1.0;
    im.at(1, 0) = -1.0;
    const auto v = sym_eig_values(hermitian_embedding(re, im));
    CHECK(v[0] == doctest::Approx(3.0));
    CHECK(v[1] == doctest::Approx(3.0));
    CHECK(v[2] == doctest::Approx(1.0));
    CHECK(v[3] == doctest::Approx(1.0));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "condlab/errors.hpp"
#include "condlab/fit.hpp"

using namespace condlab;

namespace {

GrowthSeries make_series(const std::vector<long>& ms, const std::vector<double>& vs,
                         ValueKind kind = ValueKind::Exact) {
    GrowthSeries s;
    s.quantity = "test";
    s.system = "synthetic";
    for (std::size_t i = 0; i < ms.size(); ++i) s.add(ms[i], vs[i], kind);
    return s;
}

std::vector<long> dyadic(int lo, int hi) {
    std::vector<long> m;
    for (int k = lo; k <= hi; ++k) m.push_back(1L << k);
    return m;
}

}  // namespace

TEST_CASE("fit_power recovers exact power laws") {
    const auto ms = dyadic(4, 12);
    std::vector<double> v;
    for (long m : ms) v.push_back(double(m));
    const auto rep = fit_power(make_series(ms, v));
    CHECK(rep.gamma == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rep.r2 == doctest::Approx(1.0).epsilon(1e-12));

    std::vector<double> c(ms.size(), 5.0);
    const auto repc = fit_power(make_series(ms, c));
    CHECK(repc.gamma == doctest::Approx(0.0));
}

TEST_CASE("fit_power with noise") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-0.01, 0.01);
    const auto ms = dyadic(4, 14);
    std::vector<double> v;
    for (long m : ms) v.push_back(3.0 * std::pow(double(m), 0.75) * (1.0 + u(rng)));
    const auto rep = fit_power(make_series(ms, v));
    CHECK(rep.gamma == doctest::Approx(0.75).epsilon(0.03));
}

TEST_CASE("fit invariance under positive scaling") {
    const auto ms = dyadic(4, 10);
    std::vector<double> v, w;
    for (long m : ms) {
        v.push_back(std::pow(double(m), 0.4));
        w.push_back(17.5 * std::pow(double(m), 0.4));
    }
    const auto a = fit_power(make_series(ms, v));
    const auto b = fit_power(make_series(ms, w));
    CHECK(a.gamma == doctest::Approx(b.gamma).epsilon(1e-12));
}

TEST_CASE("fit_power ignores envelope points and needs five") {
    GrowthSeries s = make_series({16, 32, 64, 128, 256}, {2, 3, 4, 5, 6});
    s.add(512, 1000.0, ValueKind::UpperEnvelope);
    const auto rep = fit_power(s);
    CHECK(rep.points_used == 5);
    CHECK_THROWS_AS(fit_power(make_series({2, 4, 8}, {1, 2, 3})), InsufficientData);
}

TEST_CASE("fit_log_power") {
    // values (log m)^{1/2} at m = 2^{2^k} so that squares are present
    std::vector<long> ms{4, 16, 256, 65536, 4294967296L};
    std::vector<double> v;
    for (long m : ms) v.push_back(std::sqrt(std::log(double(m))));
    const auto rep = fit_log_power(make_series(ms, v));
    CHECK(rep.gamma == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(rep.doubling_ratio == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));

    // harmonic-sum values over a dyadic range
    std::vector<long> md = dyadic(4, 14);
    std::vector<double> h;
    for (long m : md) {
        double acc = 0.0;
        for (long n = 1; n <= m; ++n) acc += 1.0 / double(n);
        h.push_back(std::sqrt(acc));
    }
    const auto rep2 = fit_log_power(make_series(md, h));
    CHECK(rep2.gamma == doctest::Approx(0.5).epsilon(0.2));  // |gamma - 0.5| <= 0.1
}

TEST_CASE("ratio stabilization") {
    const auto ms = dyadic(4, 12);
    SUBCASE("constant series") {
        std::vector<double> v(ms.size(), 2.5);
        const auto rep = ratio_stabilization(make_series(ms, v));
        CHECK(rep.spread == doctest::Approx(1.0));
        CHECK(rep.gamma == doctest::Approx(0.0));
        CHECK(rep.bounded_verdict);
        CHECK(rep.limit == doctest::Approx(2.5));
    }
    SUBCASE("slow power growth is flagged unbounded") {
        std::vector<double> v;
        for (long m : ms) v.push_back(std::pow(double(m), 0.1));
        const auto rep = ratio_stabilization(make_series(ms, v));
        CHECK(rep.gamma == doctest::Approx(0.1).epsilon(1e-10));
        CHECK_FALSE(rep.bounded_verdict);
    }
}

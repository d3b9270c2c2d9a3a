#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "condlab/config.hpp"
#include "condlab/csvio.hpp"
#include "condlab/errors.hpp"

using namespace condlab;

TEST_CASE("experiment config round trip") {
    const std::string text = "seed=42\nmmax=4096\nsystem=diamond(ortho(n=4),ortho(n=4))\ntol=1e-10\n";
    const auto cfg = ExperimentConfig::parse(text);
    CHECK(cfg.get_long("seed", 0) == 42);
    CHECK(cfg.get_double("tol", 0) == 1e-10);
    CHECK(cfg.get("system") == "diamond(ortho(n=4),ortho(n=4))");
    const std::string emitted = cfg.emit();
    const auto cfg2 = ExperimentConfig::parse(emitted);
    CHECK(cfg2.emit() == emitted);
}

TEST_CASE("config comments and errors") {
    const auto cfg = ExperimentConfig::parse("# a comment\nkey=value # trailing\n\n");
    CHECK(cfg.get("key") == "value");
    CHECK_THROWS_AS(ExperimentConfig::parse("not a pair\n"), InvalidParameter);
}

TEST_CASE("system constructor trees") {
    const auto o = parse_system("ortho(n=6)", "");
    CHECK(o->dim() == 6);
    CHECK(o->gram() != nullptr);

    const auto d = parse_system("diamond(ortho(n=4),ortho(n=4))", "");
    CHECK(d->dim() == 8);

    const auto u = parse_system("unit(space=[lorentz:2,1],n=8)", "");
    CHECK(u->dim() == 8);
    CHECK(u->norm({1.0}) == doctest::Approx(1.0));

    const auto p = parse_system("prefix(ortho(n=4),sizes=list:2|4,p=2)", "");
    CHECK(p->dim() == 6);

    const auto y = parse_system("dkk(ortho(n=3),space=[lp:2],blocks=3)", "");
    CHECK(y->dim() == 2 + 4 + 8);

    CHECK_THROWS_AS(parse_system("widget(n=2)", ""), InvalidParameter);
}

TEST_CASE("trig system through the cache") {
    const std::string dir = "/tmp/condlab_cache_test";
    const auto s = parse_system("trig(lambda=-0.5,n=9,arr=real)", dir);
    CHECK(s->dim() == 9);
    CHECK(s->gram() != nullptr);
    // second parse hits the cache and must agree bit-exactly
    const auto s2 = parse_system("trig(lambda=-0.5,n=9,arr=real)", dir);
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j) CHECK(s->gram()->at(i, j) == s2->gram()->at(i, j));
}

TEST_CASE("growth series csv round trip") {
    GrowthSeries a;
    a.quantity = "ktilde";
    a.system = "diamond";
    a.add(16, 1.25, ValueKind::Exact);
    a.add(32, 1.5000000000000002, ValueKind::LowerWitness);
    GrowthSeries b;
    b.quantity = "envelope";
    b.system = "diamond";
    b.add(16, 3.9999999999999996, ValueKind::UpperEnvelope);
    const std::string csv = growth_series_csv({a, b});
    const auto parsed = parse_growth_series_csv(csv);
    REQUIRE(parsed.size() == 2);
    CHECK(parsed[0].entries[1].value == 1.5000000000000002);  // 17 digits round trip
    CHECK(parsed[1].entries[0].kind == ValueKind::UpperEnvelope);
    CHECK(growth_series_csv(parsed) == csv);
}

TEST_CASE("format_double round trips doubles") {
    for (double v : {1.0 / 3.0, 2.718281828459045, 1e-300, 6.626e34}) {
        CHECK(std::stod(format_double(v)) == v);
    }
}

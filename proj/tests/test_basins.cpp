#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "fixtures.hpp"
#include "socdyn/basins.hpp"
#include "socdyn/classify.hpp"

using namespace socdyn;
using namespace fixtures;

TEST_CASE("sampling") {
    const auto one = sample_simplex(1, 42);
    for (double v : one[0].coords()) CHECK(v > 0.0);
    CHECK(sample_simplex(50, 9) == sample_simplex(50, 9));
    CHECK_FALSE(sample_simplex(50, 9) == sample_simplex(50, 10));
    CHECK_THROWS_AS(sample_simplex(0, 1), std::invalid_argument);
}

TEST_CASE("sample means are uniform") {
    const auto xs = sample_simplex(100000, 1);
    std::array<double, 4> mean{};
    for (const auto& x : xs)
        for (int i = 0; i < 4; ++i) mean[i] += x[i] / xs.size();
    for (double m : mean) CHECK(std::abs(m - 0.25) < 0.005);
}

TEST_CASE("basins for set A and set B") {
    IntegratorConfig cfg;
    const auto a = estimate_basins(kSetA, 2000, 42, cfg);
    REQUIRE(a.attractors.size() == 4);
    double total = a.unresolved_fraction;
    for (const auto& e : a.attractors) {
        CHECK(e.hits > 0);
        total += e.fraction;
    }
    CHECK(std::abs(total - 1.0) < 1e-12);
    CHECK(a.unresolved_fraction <= 0.005);

    const auto b = estimate_basins(kSetB, 2000, 42, cfg);
    REQUIRE(b.attractors.size() == 3);
    for (const auto& e : b.attractors) CHECK(e.hits > 0);
    CHECK(b.unresolved_fraction <= 0.01);
}

TEST_CASE("results do not depend on the worker count") {
    const auto serial = estimate_basins(kSetC, 300, 5, {}, 1);
    const auto parallel = estimate_basins(kSetC, 300, 5, {}, 4);
    REQUIRE(serial.attractors.size() == parallel.attractors.size());
    for (std::size_t i = 0; i < serial.attractors.size(); ++i)
        CHECK(serial.attractors[i].hits == parallel.attractors[i].hits);
}

TEST_CASE("standard error shrinks with the sample count") {
    const auto small = estimate_basins(kSetA, 500, 8, {});
    const auto large = estimate_basins(kSetA, 1000, 8, {});
    for (std::size_t i = 0; i < small.attractors.size(); ++i) {
        const double ratio = small.attractors[i].std_error / large.attractors[i].std_error;
        CHECK(ratio == doctest::Approx(std::sqrt(2.0)).epsilon(0.2));
    }
}

TEST_CASE("csv table") {
    std::ostringstream os;
    write_basin_csv(os, estimate_basins(kSetA, 20, 1, {}));
    const std::string s = os.str();
    CHECK(s.rfind("attractor,x1,x2,x3,x4,hits,fraction,std_error\n", 0) == 0);
    CHECK(s.find("\nunresolved,") != std::string::npos);
}

TEST_CASE("a start deep in the trap") {
    const auto att = classify_global(kSetA).global_attractors;
    CHECK(find_attractor(SimplexState::make(0.01, 0.01, 0.01, 0.97), kSetA, {}, att).label == "N");
}

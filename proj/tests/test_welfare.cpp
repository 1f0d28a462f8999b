#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "socdyn/classify.hpp"
#include "socdyn/welfare.hpp"

using namespace socdyn;
using namespace fixtures;

TEST_CASE("stationary payoffs") {
    CHECK(stationary_payoff(vertex_state(Strategy::O, kSetA), kSetA) == 2.0);
    CHECK(stationary_payoff(vertex_state(Strategy::N, kSetA), kSetA) == 0.5);
    CHECK(coexistence_payoff(kSetA) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(coexistence_payoff(kSetB) == doctest::Approx(1.0 / 3).epsilon(1e-12));
    const auto pi = payoff_vector(SimplexState::make(0, 1.0 / 3, 2.0 / 3, 0), kSetB);
    CHECK(std::abs(pi[1] - coexistence_payoff(kSetB)) < 1e-12);
}

TEST_CASE("welfare ordering, set A") {
    const auto w = classify_global(kSetA).welfare;
    REQUIRE(w.ordering.size() == 4);
    CHECK(w.ordering[0].label == "O");
    CHECK(w.ordering[1].label == "P");
    CHECK(w.ordering[1].tied_with_previous);
    CHECK(w.ordering[2].label == "H");
    CHECK(w.ordering[3].label == "N");
    CHECK(w.ordering[3].payoff == 0.5);
    CHECK(w.trap_dominated);
}

TEST_CASE("welfare ordering, set B") {
    const auto w = classify_global(kSetB).welfare;
    REQUIRE(w.ordering.size() == 3);
    CHECK(w.ordering[0].label == "O");
    CHECK(w.ordering[1].label == "HP");
    CHECK(w.ordering[1].payoff == doctest::Approx(1.0 / 3));
    CHECK(w.ordering[2].label == "N");
    CHECK(w.trap_dominated);
    bool flagged = false;
    for (const auto& [a, b] : w.incomparable_pairs) flagged = flagged || (a == "O" && b == "HP");
    CHECK(flagged);
}

TEST_CASE("single attractor is vacuously trap-dominated") {
    const std::vector<StationaryState> only{vertex_state(Strategy::N, kSetA)};
    const auto w = welfare_report(only, kSetA);
    CHECK(w.trap_dominated);
    CHECK(w.incomparable_pairs.empty());
}

TEST_CASE("an attractor below eta is an ordering violation") {
    Params p = kSetA;
    p.beta = 0.4;  // H would pay less than N
    const std::vector<StationaryState> bad{vertex_state(Strategy::H, p),
                                           vertex_state(Strategy::N, p)};
    CHECK_THROWS_AS(welfare_report(bad, p), OrderingViolation);
}

TEST_CASE("closed form matches direct evaluation") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 1000; ++i) {
        const Params p = draw_params(rng);
        const double x2 = coexistence_share(p);
        const auto pi = payoff_vector(SimplexState::make(0, x2, 1 - x2, 0), p);
        CHECK(std::abs(pi[1] - coexistence_payoff(p)) < 1e-12);
        CHECK(std::abs(pi[2] - coexistence_payoff(p)) < 1e-12);
    }
}

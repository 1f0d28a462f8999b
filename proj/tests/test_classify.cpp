#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "socdyn/classify.hpp"

using namespace socdyn;
using namespace fixtures;

namespace {

std::vector<std::string> labels(const std::vector<StationaryState>& states) {
    std::vector<std::string> out;
    for (const auto& s : states) out.push_back(s.label);
    return out;
}

std::vector<Sign> signs(const StationaryState& s) {
    std::vector<Sign> out;
    for (const auto& e : s.eigen_signs) out.push_back(e.sign);
    return out;
}

constexpr Sign kNeg = Sign::Negative;
constexpr Sign kPos = Sign::Positive;

}  // namespace

TEST_CASE("normalized matrix") {
    const auto a = normalize_matrix(kSetA);
    CHECK(a.a == -2);
    CHECK(a.b == 1);
    CHECK(a.c == 1);
    CHECK(a.d == -2);
    CHECK(a.e == -1);
    CHECK(a.f == 2);
    const auto b = normalize_matrix(kSetB);
    CHECK(b.b == -2);
    CHECK(b.c == 1.5);
    CHECK(b.f == 1);
    CHECK(b.normalized()[0] == std::array<double, 3>{0, 0, 0});
}

TEST_CASE("vertex eigen-signs in the face without N") {
    const auto a = vertex_eigensigns(kSetA);
    for (const auto& s : a) {
        CHECK(signs(s) == std::vector<Sign>{kNeg, kNeg});
        CHECK(s.stability == Stability::Attractive);
    }
    const auto b = vertex_eigensigns(kSetB);
    CHECK(b[1].stability == Stability::Repulsive);
    CHECK(signs(b[2]) == std::vector<Sign>{kNeg, kPos});
    CHECK(b[2].stability == Stability::Saddle);
    std::mt19937_64 rng(2);
    for (int i = 0; i < 100; ++i)
        CHECK(vertex_eigensigns(draw_params(rng))[0].stability == Stability::Attractive);
}

TEST_CASE("edge interior states") {
    const auto a = edge_interior_states(kSetA);
    CHECK(labels(a) == std::vector<std::string>{"OH", "OP", "HP"});
    const auto& hp = a[2];
    CHECK(max_abs_diff(hp.location, SimplexState::make(0, 1.0 / 3, 2.0 / 3, 0)) < 1e-15);
    CHECK(signs(hp) == std::vector<Sign>{kPos, kNeg});
    const auto b = edge_interior_states(kSetB);
    CHECK(labels(b) == std::vector<std::string>{"OP", "HP"});
    CHECK(signs(b[1]) == std::vector<Sign>{kNeg, kNeg});
}

TEST_CASE("face interior state") {
    const auto a = face_interior_state(kSetA);
    REQUIRE(a);
    CHECK(max_abs_diff(a->location, SimplexState::make(1.0 / 3, 2.0 / 9, 4.0 / 9, 0)) < 1e-12);
    CHECK(a->payoff == doctest::Approx(2.0 / 3));
    const auto b = face_interior_state(kSetB);
    REQUIRE(b);
    CHECK(b->stability == Stability::Saddle);
    CHECK(face_interior_state(kSetC));
}

TEST_CASE("full interior state") {
    const auto a = full_interior_state(kSetA);
    REQUIRE(a);
    CHECK(max_abs_diff(a->location, SimplexState::make(0.25, 1.0 / 6, 1.0 / 3, 0.25)) < 1e-12);
    CHECK(a->payoff == doctest::Approx(0.5));
    REQUIRE(a->positive_eigenvalue);
    CHECK(*a->positive_eigenvalue == doctest::Approx(0.5));
    CHECK(a->stability != Stability::Attractive);
}

TEST_CASE("edge regimes of the reference sets") {
    CHECK(classify_edge_sn(kSetA).figure == "2a");
    CHECK(classify_edge_sn(kSetA).pp == 7);
    CHECK(labels(classify_edge_sn(kSetA).attractors) == std::vector<std::string>{"O", "H", "P"});
    CHECK(classify_edge_sn(kSetB).figure == "2e");
    CHECK(classify_edge_sn(kSetB).pp == 11);
    CHECK(labels(classify_edge_sn(kSetB).attractors) == std::vector<std::string>{"O", "HP"});
    CHECK(classify_edge_sn(kSetC).figure == "2c");
    CHECK(classify_edge_sn(kSetC).pp == 9);
    CHECK(classify_edge_so(kSetA).figure == "3a");
    CHECK(classify_edge_so(kSetB).figure == "3e");
    CHECK(classify_edge_so(kSetC).figure == "3d");
    CHECK(classify_edge_sh(kSetA).figure == "4a");
    CHECK(classify_edge_sh(kSetB).figure == "4a");
    CHECK(classify_edge_sp(kSetA).figure == "5a");
    CHECK(classify_edge_sp(kSetB).figure == "5c");
    CHECK(classify_edge_sp(kSetC).figure == "5c");
}

TEST_CASE("global attractors of the reference sets") {
    CHECK(labels(classify_global(kSetA).global_attractors) ==
          std::vector<std::string>{"O", "H", "P", "N"});
    const auto b = classify_global(kSetB);
    CHECK(labels(b.global_attractors) == std::vector<std::string>{"O", "N", "HP"});
    CHECK(b.global_case == GlobalCase::PoliteUnstable);
    CHECK(labels(classify_global(kSetC).global_attractors) ==
          std::vector<std::string>{"O", "P", "N"});
    CHECK_THROWS_AS(classify_global(kSetD), DegenerateError);
    Params p = kSetA;
    p.eta = 1.5;
    CHECK_THROWS_AS(classify_global(p), InvalidParamsError);
}

TEST_CASE("numeric jacobian") {
    const auto h = numeric_jacobian(SimplexState::vertex(Strategy::H), kSetA);
    for (const auto& l : h.eigenvalues) CHECK(l.real() < 0);
    const auto lv = numeric_jacobian(LVState{2.0 / 3, 4.0 / 3, 1.0}, kSetA, JacobianSystem::Lv3d);
    double gap = 1e9;
    for (const auto& l : lv.eigenvalues) gap = std::min(gap, std::abs(l - 0.5));
    CHECK(gap < 1e-4);
    const auto hp = numeric_jacobian(SimplexState::make(0, 1.0 / 3, 2.0 / 3, 0), kSetB);
    for (const auto& l : hp.eigenvalues) CHECK(l.real() < 0);
    CHECK_THROWS_AS(numeric_jacobian(SimplexState::make(0.5, 0.5, 0, 0), kSetA),
                    NonStationaryError);
}

TEST_CASE("classification properties over random draws") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 500; ++i) {
        const Params p = draw_params(rng);
        const auto r = classify_global(p);
        const auto nash = nash_vertices(p);
        std::set<std::string> att;
        for (const auto& a : r.global_attractors) {
            att.insert(a.label);
            CHECK(a.support().size() <= 2);
            CHECK(a.stability == Stability::Attractive);
        }
        CHECK(att.count("O") == 1);
        CHECK(att.count("N") == 1);
        for (Strategy s : kAllStrategies)
            CHECK(nash[s] == (att.count(std::string(1, letter(s))) == 1));
        // Attractive H-P state exactly when its payoff beats eta in the branch where it can be.
        const bool hp = att.count("HP") == 1;
        if (r.validation.branch == Branch::Minus) {
            const double x2 = coexistence_share(p);
            const double direct = payoff_vector(SimplexState::make(0, x2, 1 - x2, 0), p)[1];
            CHECK(hp == (direct > p.eta));
        } else {
            CHECK_FALSE(hp);
        }
    }
}

TEST_CASE("face stationary states agree with the analytic finders") {
    const auto states = face_stationary_states(kSetA, Face::SN);
    std::set<std::string> found;
    for (const auto& s : states) found.insert(s.label);
    CHECK(found == std::set<std::string>{"O", "H", "P", "OH", "OP", "HP", "OHP"});
    for (const auto& s : states)
        if (s.label.size() == 1) CHECK(s.stability == Stability::Attractive);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "socdyn/basins.hpp"
#include "socdyn/classify.hpp"
#include "socdyn/dynamics.hpp"

using namespace socdyn;
using namespace fixtures;

namespace {
double max_norm(const Rates4& r) {
    double m = 0.0;
    for (double v : r) m = std::max(m, std::abs(v));
    return m;
}
}  // namespace

TEST_CASE("replicator field at stationary points") {
    for (Strategy s : kAllStrategies)
        CHECK(max_norm(replicator_rhs(SimplexState::vertex(s), kSetB)) == 0.0);
    CHECK(max_norm(replicator_rhs(SimplexState::make(0.25, 1.0 / 6, 1.0 / 3, 0.25), kSetA)) <
          1e-15);
    const auto r = replicator_rhs(SimplexState::make(0, 0, 0.1, 0.9), kSetA);
    CHECK(r[0] == 0.0);
    CHECK(r[1] == 0.0);
    CHECK(r[2] == doctest::Approx(-0.027));
    CHECK(r[3] == doctest::Approx(0.027));
}

TEST_CASE("replicator field sums to zero") {
    for (std::uint64_t i = 0; i < 1000; ++i) {
        const auto r = replicator_rhs(sample_simplex_at(9, i), kSetC);
        CHECK(std::abs(r[0] + r[1] + r[2] + r[3]) < 1e-12);
    }
}

TEST_CASE("face field") {
    CHECK(max_norm(face_rhs(SimplexState::make(1.0 / 3, 2.0 / 9, 4.0 / 9, 0), kSetA)) < 1e-15);
    CHECK(max_norm(face_rhs(SimplexState::make(0, 1.0 / 3, 2.0 / 3, 0), kSetA)) < 1e-15);
    CHECK(max_norm(face_rhs(SimplexState::vertex(Strategy::H), kSetA)) == 0.0);
    CHECK_THROWS_AS(face_rhs(SimplexState::make(0.5, 0, 0, 0.5), kSetA), InvalidStateError);
}

TEST_CASE("ratio-coordinate fields") {
    const auto o = lv_rhs_3d({0, 0, 0}, kSetA);
    CHECK(o == std::array<double, 3>{0, 0, 0});
    const auto interior = lv_rhs_3d({2.0 / 3, 4.0 / 3, 1.0}, kSetA);
    for (double v : interior) CHECK(std::abs(v) < 1e-15);
    const auto y = lv_rhs_3d({1, 0, 0}, kSetA);
    CHECK(y == std::array<double, 3>{-1, 0, 0});
    CHECK(lv_rhs_2d({0, 0}, kSetA) == std::array<double, 2>{0, 0});
    const auto f = lv_rhs_2d({2.0 / 3, 4.0 / 3}, kSetA);
    CHECK(std::abs(f[0]) < 1e-15);
    CHECK(std::abs(f[1]) < 1e-15);
    CHECK(lv_rhs_2d({0, 2}, kSetA) == std::array<double, 2>{0, 4});
}

TEST_CASE("planar part does not depend on w") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 5.0);
    for (int i = 0; i < 1000; ++i) {
        const LVState s{u(rng), u(rng), u(rng)};
        const auto a = lv_rhs_3d(s, kSetB);
        const auto b = lv_rhs_2d({s.y, s.z}, kSetB);
        CHECK(a[0] == b[0]);
        CHECK(a[1] == b[1]);
    }
}

TEST_CASE("chart maps") {
    const auto o = to_lv(SimplexState::vertex(Strategy::O));
    CHECK((o.y == 0 && o.z == 0 && o.w == 0));
    const auto s = to_lv(SimplexState::make(0.25, 1.0 / 6, 1.0 / 3, 0.25));
    CHECK(s.y == doctest::Approx(2.0 / 3));
    CHECK(s.z == doctest::Approx(4.0 / 3));
    CHECK(s.w == doctest::Approx(1.0));
    CHECK_THROWS_AS(to_lv(SimplexState::make(0, 0.5, 0.5, 0)), ChartError);
    CHECK(from_lv({0, 0, 0}) == SimplexState::vertex(Strategy::O));
    CHECK(max_abs_diff(from_lv({2.0 / 3, 4.0 / 3, 1.0}),
                       SimplexState::make(0.25, 1.0 / 6, 1.0 / 3, 0.25)) < 1e-15);
    for (std::uint64_t i = 0; i < 1000; ++i) {
        const auto x = sample_simplex_at(4, i);
        CHECK(max_abs_diff(from_lv(to_lv(x)), x) < 1e-12);
    }
}

TEST_CASE("integration on the N-P edge") {
    IntegratorConfig cfg;
    auto low = integrate(SimplexState::make(0, 0, 0.1, 0.9), kSetA, cfg);
    CHECK(low.verdict == Verdict::Converged);
    CHECK(max_abs_diff(low.final_state(), SimplexState::vertex(Strategy::N)) < 1e-9);
    auto high = integrate(SimplexState::make(0, 0, 0.6, 0.4), kSetA, cfg);
    CHECK(high.verdict == Verdict::Converged);
    CHECK(max_abs_diff(high.final_state(), SimplexState::vertex(Strategy::P)) < 1e-9);
}

TEST_CASE("starting at a vertex converges immediately") {
    const auto t = integrate(SimplexState::vertex(Strategy::N), kSetA, IntegratorConfig{});
    CHECK(t.verdict == Verdict::Converged);
    CHECK(t.final_time() == 0.0);
    CHECK(t.final_state() == SimplexState::vertex(Strategy::N));
}

TEST_CASE("fixed-step integration is reproducible") {
    IntegratorConfig cfg;
    cfg.method = Method::Rk4;
    cfg.max_time = 30;
    const auto x0 = SimplexState::make(0.3, 0.3, 0.2, 0.2);
    const auto a = integrate(x0, kSetC, cfg);
    const auto b = integrate(x0, kSetC, cfg);
    CHECK(a.states == b.states);
    // Agrees with the adaptive method.
    IntegratorConfig adaptive;
    adaptive.max_time = 30;
    CHECK(max_abs_diff(advance(x0, kSetC, 30, cfg), advance(x0, kSetC, 30, adaptive)) < 1e-7);
}

TEST_CASE("edge invariance and simplex preservation") {
    std::mt19937_64 rng(21);
    for (int n = 0; n < 200; ++n) {
        const Params p = draw_params(rng);
        auto x = sample_simplex_at(21, static_cast<std::uint64_t>(n)).coords();
        x[rng() % 4] = 0.0;
        const double sum = x[0] + x[1] + x[2] + x[3];
        for (double& v : x) v /= sum;
        IntegratorConfig cfg;
        cfg.max_time = 100;
        const auto t = integrate(SimplexState::make(x), p, cfg);
        for (const auto& s : t.states) {
            double total = 0;
            for (int i = 0; i < 4; ++i) {
                total += s[i];
                CHECK(s[i] >= 0.0);
                if (x[i] == 0.0) CHECK(s[i] == 0.0);
            }
            CHECK(std::abs(total - 1.0) < 1e-9);
        }
    }
}

TEST_CASE("almost every start converges to an edge state") {
    for (const Params& p : {kSetA, kSetB}) {
        IntegratorConfig cfg;
        cfg.record = false;
        int on_edge = 0;
        for (std::uint64_t i = 0; i < 1000; ++i) {
            const auto t = integrate(sample_simplex_at(77, i), p, cfg);
            int support = 0;
            for (double v : t.final_state().coords()) support += v > 1e-6;
            if (t.verdict == Verdict::Converged && support <= 2) ++on_edge;
        }
        CHECK(on_edge >= 999);
    }
}

TEST_CASE("attractor matching") {
    const auto b = classify_global(kSetB).global_attractors;
    const auto m = find_attractor(SimplexState::make(0.05, 0.35, 0.55, 0.05), kSetB, {}, b);
    CHECK(m.label == "HP");
    std::mt19937_64 rng(3);
    for (int i = 0; i < 20; ++i) {
        const Params p = draw_params(rng);
        const auto att = classify_global(p).global_attractors;
        CHECK(find_attractor(SimplexState::make(0.9, 0.03, 0.03, 0.04), p, {}, att).label == "O");
    }
    const auto a = classify_global(kSetA).global_attractors;
    CHECK(find_attractor(SimplexState::vertex(Strategy::H), kSetA, {}, a).label == "H");
}

TEST_CASE("conjugacy with the time change") {
    IntegratorConfig cfg;
    cfg.abs_tol = cfg.rel_tol = 1e-12;
    for (std::uint64_t i = 0; i < 10; ++i) {
        SimplexState x = sample_simplex_at(8, i);
        if (x.x1() < 0.05) continue;
        LVPoint lv{to_lv(x), 0.0};
        for (int t = 0; t < 10; ++t) {
            x = advance(x, kSetB, 1.0, cfg);
            lv = advance_lv(lv, kSetB, 1.0, cfg);
            CHECK(max_abs_diff(x, from_lv(lv.state)) < 1e-8);
        }
        CHECK(lv.tau > 0.0);
    }
}

TEST_CASE("config checks and csv") {
    IntegratorConfig cfg;
    cfg.abs_tol = 0;
    CHECK_THROWS_AS(cfg.check(), std::invalid_argument);
    std::ostringstream os;
    write_trajectory_csv(os,
                         integrate(SimplexState::make(0, 0, 0.6, 0.4), kSetA, IntegratorConfig{}));
    CHECK(os.str().rfind("t,x1,x2,x3,x4\n", 0) == 0);
}

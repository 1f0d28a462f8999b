#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "fixtures.hpp"
#include "socdyn/portrait.hpp"

using namespace socdyn;
using namespace fixtures;

namespace {

const PortraitMarker* marker(const Portrait& p, Face f, const std::string& label) {
    for (const auto& m : p.markers)
        if (m.face == f && m.state.label == label) return &m;
    return nullptr;
}

}  // namespace

TEST_CASE("lattice starts stay on their face") {
    for (Face f : kAllFaces) {
        const auto pts = face_lattice(f, 6);
        CHECK(pts.size() == 6);
        for (const auto& x : pts) {
            CHECK(x.share(missing_strategy(f)) == 0.0);
            for (Strategy s : face_strategies(f)) CHECK(x.share(s) > 0.0);
        }
    }
}

TEST_CASE("net geometry") {
    const auto o = net_position(Face::SN, SimplexState::vertex(Strategy::O));
    const auto h = net_position(Face::SN, SimplexState::vertex(Strategy::H));
    CHECK(o.first == 0.0);
    CHECK(h.first == 1.0);
    // Shared vertices coincide in adjacent faces.
    const auto h2 = net_position(Face::SP, SimplexState::vertex(Strategy::H));
    CHECK(h2 == h);
    // Each N apex is the mirror of the opposite base vertex.
    const auto n = net_position(Face::SP, SimplexState::vertex(Strategy::N));
    CHECK(n.first == doctest::Approx(0.5));
    CHECK(n.second == doctest::Approx(-std::sqrt(3.0) / 2));
}

TEST_CASE("set A marks all four vertices attractive") {
    PortraitOptions opt;
    opt.trajectories_per_face = 2;
    const auto p = build_portrait(kSetA, opt);
    for (const char* v : {"O", "H", "P"})
        CHECK(marker(p, Face::SN, v)->state.stability == Stability::Attractive);
    CHECK(marker(p, Face::SO, "N")->state.stability == Stability::Attractive);
    const std::string svg = render_svg(p);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("set B marks the H-P state attractive") {
    const auto p = build_portrait(kSetB, {});
    const auto* hp = marker(p, Face::SN, "HP");
    REQUIRE(hp);
    CHECK(hp->state.stability == Stability::Attractive);
    CHECK(hp->state.location.x2() == doctest::Approx(1.0 / 3));
    CHECK(marker(p, Face::SN, "H")->state.stability != Stability::Attractive);
    std::ostringstream os;
    write_portrait_csv(os, p);
    CHECK(os.str().rfind("face,trajectory,origin,t,x1,x2,x3,x4\n", 0) == 0);
}

TEST_CASE("degenerate parameters are refused") {
    CHECK_THROWS_AS(build_portrait(kSetD, {}), DegenerateError);
}

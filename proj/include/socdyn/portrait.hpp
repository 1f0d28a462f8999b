#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "socdyn/classify.hpp"
#include "socdyn/dynamics.hpp"

namespace socdyn {

struct PortraitOptions {
    std::size_t trajectories_per_face = 6;
    bool saddle_outsets = true;
    double outset = 1e-4;  // offset along the unstable eigenvector
    IntegratorConfig integrator{Method::Rk45, 1e-2, 1e-9, 1e-9, 200.0, 1e-10, 1e-14, true};
};

struct PortraitTrajectory {
    Face face = Face::SN;
    std::string origin;  // "lattice" or "outset:<label>"
    Trajectory trajectory;
};

/// A stationary state as drawn: stability in the whole simplex, which is what
/// the marker shows in every face the state belongs to.
struct PortraitMarker {
    Face face = Face::SN;
    StationaryState state;
};

struct Portrait {
    Params params;
    std::vector<PortraitMarker> markers;
    std::vector<PortraitTrajectory> trajectories;
};

/// Starting points on a face: the `count` interior points of the smallest
/// regular lattice with at least that many, evenly thinned.
std::vector<SimplexState> face_lattice(Face face, std::size_t count);

/// Stationary states of every face plus overlay trajectories. Requires
/// validated parameters; throws IntegrationError if any overlay fails.
Portrait build_portrait(const Params& p, const PortraitOptions& opt = {}, double tol = kDefaultTol);

/// Planar net: base triangle O-H-P, each side carrying the folded-out face
/// with apex N. Filled marker = attractive, open = repulsive, half = saddle.
std::string render_svg(const Portrait& portrait);

/// Position of a face point in the net, in layout units (side length 1).
std::pair<double, double> net_position(Face face, const SimplexState& x);

/// Columns: face,trajectory,origin,t,x1,x2,x3,x4.
void write_portrait_csv(std::ostream& os, const Portrait& portrait);

}  // namespace socdyn

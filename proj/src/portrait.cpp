#include "socdyn/portrait.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace socdyn {

namespace {

using Point = std::pair<double, double>;

const double kHeight = std::sqrt(3.0) / 2.0;
const Point kO{0.0, 0.0};
const Point kH{1.0, 0.0};
const Point kP{0.5, kHeight};

// Apex N of the folded face sitting on the base side opposite to `other`.
Point apex(const Point& a, const Point& b, const Point& other) {
    return {a.first + b.first - other.first, a.second + b.second - other.second};
}

std::array<Point, 4> face_corners(Face face) {
    switch (face) {
        case Face::SN:
            return {kO, kH, kP, kP};
        case Face::SP:
            return {kO, kH, kP, apex(kO, kH, kP)};
        case Face::SO:
            return {kO, kH, kP, apex(kH, kP, kO)};
        case Face::SH:
            return {kO, kH, kP, apex(kO, kP, kH)};
    }
    return {kO, kH, kP, kP};
}

constexpr double kSignTol = 1e-7;

StationaryState with_global_stability(StationaryState st, const Params& p) {
    try {
        const auto jac = numeric_jacobian(st.location, p, JacobianSystem::ReplicatorFull);
        st.eigen_signs.clear();
        for (std::size_t i = 0; i < jac.eigenvalues.size(); ++i)
            st.eigen_signs.push_back(
                {"eig" + std::to_string(i + 1), sign_of(jac.eigenvalues[i].real(), kSignTol)});
        st.stability = stability_from_signs(st.eigen_signs);
    } catch (const NonStationaryError&) {
        st.stability = Stability::Degenerate;
    }
    return st;
}

// Starts just off a face saddle along each real unstable direction.
std::vector<SimplexState> outsets(const StationaryState& st, const Params& p, Face face,
                                  double offset) {
    std::vector<SimplexState> out;
    JacobianResult jac;
    try {
        jac = numeric_face_jacobian(st.location, p, face);
    } catch (const NonStationaryError&) {
        return out;
    }
    for (std::size_t k = 0; k < jac.eigenvalues.size(); ++k) {
        const auto lambda = jac.eigenvalues[k];
        if (lambda.real() <= kSignTol || std::abs(lambda.imag()) > kSignTol) continue;
        const Eigen::VectorXd d = jac.basis * jac.eigenvectors[k].real();
        const double scale = d.cwiseAbs().maxCoeff();
        if (scale == 0.0) continue;
        for (double sgn : {1.0, -1.0}) {
            std::array<double, 4> x = st.location.coords();
            bool ok = true;
            for (int i = 0; i < 4; ++i) {
                x[i] += sgn * offset * d(i) / scale;
                if (x[i] < 0.0) ok = false;
            }
            if (ok) out.push_back(SimplexState::make(x));
        }
    }
    return out;
}

std::string fmt(double v) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(2) << v;
    return os.str();
}

}  // namespace

std::pair<double, double> net_position(Face face, const SimplexState& x) {
    const auto corners = face_corners(face);
    double sx = 0.0, sy = 0.0, total = 0.0;
    for (Strategy s : face_strategies(face)) {
        const double w = x.share(s);
        sx += w * corners[index_of(s)].first;
        sy += w * corners[index_of(s)].second;
        total += w;
    }
    return {sx / total, sy / total};
}

std::vector<SimplexState> face_lattice(Face face, std::size_t count) {
    std::vector<SimplexState> out;
    if (count == 0) return out;
    std::size_t m = 3;
    while ((m - 1) * (m - 2) / 2 < count) ++m;
    std::vector<std::array<int, 3>> pts;
    for (std::size_t i = 1; i < m; ++i)
        for (std::size_t j = 1; i + j < m; ++j)
            pts.push_back({static_cast<int>(i), static_cast<int>(j), static_cast<int>(m - i - j)});
    const auto strategies = face_strategies(face);
    for (std::size_t k = 0; k < count; ++k) {
        const auto& q = pts[k * pts.size() / count];
        std::array<double, 4> x{};
        for (int r = 0; r < 3; ++r) x[index_of(strategies[r])] = q[r] / static_cast<double>(m);
        out.push_back(SimplexState::make(x));
    }
    return out;
}

Portrait build_portrait(const Params& p, const PortraitOptions& opt, double tol) {
    require_valid(p, tol);
    opt.integrator.check();
    Portrait portrait{p, {}, {}};

    auto run = [&](Face face, const std::string& origin, const SimplexState& x0) {
        Trajectory t = integrate(x0, p, opt.integrator);
        if (t.verdict == Verdict::StepFailure)
            throw IntegrationError("overlay trajectory on " + std::string(to_string(face)) +
                                   " failed at t=" + std::to_string(t.final_time()));
        portrait.trajectories.push_back({face, origin, std::move(t)});
    };

    for (Face face : kAllFaces) {
        const auto states = face_stationary_states(p, face, tol);
        for (const auto& st : states) {
            portrait.markers.push_back({face, with_global_stability(st, p)});
            if (opt.saddle_outsets && st.stability == Stability::Saddle)
                for (const auto& x0 : outsets(st, p, face, opt.outset))
                    run(face, "outset:" + st.label, x0);
        }
        for (const auto& x0 : face_lattice(face, opt.trajectories_per_face))
            run(face, "lattice", x0);
    }
    return portrait;
}

std::string render_svg(const Portrait& portrait) {
    constexpr double scale = 300.0;
    constexpr double margin = 40.0;
    const double width = 2.0 * scale + 2.0 * margin;
    const double height = 2.0 * kHeight * scale + 2.0 * margin;
    auto px = [&](const Point& q) {
        return Point{margin + (q.first + 0.5) * scale, margin + (kHeight - q.second) * scale};
    };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\""
       << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << ' ' << fmt(height) << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // Faces.
    for (Face face : kAllFaces) {
        const auto c = face_corners(face);
        const auto s = face_strategies(face);
        os << "<polygon fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" points=\"";
        for (Strategy st : s) {
            const auto q = px(c[index_of(st)]);
            os << fmt(q.first) << ',' << fmt(q.second) << ' ';
        }
        os << "\"/>\n";
        double cx = 0.0, cy = 0.0;
        for (Strategy st : s) {
            cx += c[index_of(st)].first / 3.0;
            cy += c[index_of(st)].second / 3.0;
        }
        const auto q = px({cx, cy});
        os << "<text x=\"" << fmt(q.first) << "\" y=\"" << fmt(q.second)
           << "\" font-size=\"12\" fill=\"#888\" text-anchor=\"middle\">" << to_string(face)
           << "</text>\n";
    }

    // Corner labels, pushed away from the net centre.
    const Point centre{0.5, kHeight / 3.0};
    auto label = [&](const Point& at, const std::string& text) {
        const double dx = at.first - centre.first, dy = at.second - centre.second;
        const double len = std::hypot(dx, dy);
        const auto q = px({at.first + 0.07 * dx / len, at.second + 0.07 * dy / len});
        os << "<text x=\"" << fmt(q.first) << "\" y=\"" << fmt(q.second + 5.0)
           << "\" font-size=\"16\" text-anchor=\"middle\">" << text << "</text>\n";
    };
    label(kO, "O");
    label(kH, "H");
    label(kP, "P");
    for (Face face : {Face::SO, Face::SH, Face::SP}) label(face_corners(face)[3], "N");

    // Trajectories, thinned to visible displacement.
    for (const auto& tr : portrait.trajectories) {
        std::vector<Point> pts;
        const auto& states = tr.trajectory.states;
        for (std::size_t i = 0; i < states.size(); ++i) {
            const auto q = px(net_position(tr.face, states[i]));
            if (!pts.empty() &&
                std::hypot(q.first - pts.back().first, q.second - pts.back().second) < 1.0)
                continue;
            pts.push_back(q);
        }
        if (pts.size() < 2) continue;
        os << "<polyline fill=\"none\" stroke=\"#4477aa\" stroke-width=\"0.8\" "
              "marker-end=\"url(#arrow)\" points=\"";
        for (const auto& q : pts) os << fmt(q.first) << ',' << fmt(q.second) << ' ';
        os << "\"/>\n";
    }

    // Markers last so they sit on top.
    constexpr double r = 5.0;
    for (const auto& m : portrait.markers) {
        const auto q = px(net_position(m.face, m.state.location));
        const std::string x = fmt(q.first), y = fmt(q.second);
        switch (m.state.stability) {
            case Stability::Attractive:
                os << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"" << r
                   << "\" fill=\"black\" stroke=\"black\"/>\n";
                break;
            case Stability::Repulsive:
                os << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"" << r
                   << "\" fill=\"white\" stroke=\"black\"/>\n";
                break;
            case Stability::Saddle:
                os << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"" << r
                   << "\" fill=\"white\" stroke=\"black\"/>\n"
                   << "<path d=\"M " << fmt(q.first - r) << ' ' << y << " A " << r << ' ' << r
                   << " 0 0 0 " << fmt(q.first + r) << ' ' << y << " Z\" fill=\"black\"/>\n";
                break;
            case Stability::Degenerate:
                os << "<path d=\"M " << fmt(q.first - r) << ' ' << fmt(q.second - r) << " L "
                   << fmt(q.first + r) << ' ' << fmt(q.second + r) << " M " << fmt(q.first - r)
                   << ' ' << fmt(q.second + r) << " L " << fmt(q.first + r) << ' '
                   << fmt(q.second - r) << "\" stroke=\"red\"/>\n";
                break;
        }
    }

    os << "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"5\" refY=\"5\" "
          "markerWidth=\"4\" markerHeight=\"4\" orient=\"auto-start-reverse\">"
          "<path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"#4477aa\"/></marker></defs>\n";
    os << "</svg>\n";
    return os.str();
}

void write_portrait_csv(std::ostream& os, const Portrait& portrait) {
    os << "face,trajectory,origin,t,x1,x2,x3,x4\n";
    const auto old = os.precision(17);
    for (std::size_t k = 0; k < portrait.trajectories.size(); ++k) {
        const auto& tr = portrait.trajectories[k];
        for (std::size_t i = 0; i < tr.trajectory.states.size(); ++i) {
            const auto& x = tr.trajectory.states[i];
            os << to_string(tr.face) << ',' << k << ',' << tr.origin << ','
               << tr.trajectory.times[i] << ',' << x.x1() << ',' << x.x2() << ',' << x.x3() << ','
               << x.x4() << '\n';
        }
    }
    os.precision(old);
}

}  // namespace socdyn

#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "socdyn/dynamics.hpp"
#include "socdyn/model.hpp"
#include "socdyn/stationary.hpp"
#include "socdyn/welfare.hpp"

namespace socdyn {

/// The four two-dimensional faces of the simplex, named by the absent strategy.
enum class Face { SN, SO, SH, SP };
inline constexpr std::array<Face, 4> kAllFaces{Face::SN, Face::SO, Face::SH, Face::SP};

std::string_view to_string(Face f);  // "S_N", ...
Strategy missing_strategy(Face f);
/// The three strategies present on the face, in O,H,P,N order.
std::array<Strategy, 3> face_strategies(Face f);

/// Payoff table of the O/H/P game on the face without N, and its normalized
/// form with the first row subtracted from every row:
///
///     0  0  0
///     a  b  c      a = d = -alpha, b = beta, c = gamma, e = -delta, f = epsilon
///     d  e  f
struct NormalizedMatrix {
    std::array<std::array<double, 3>, 3> source{};
    double a = 0, b = 0, c = 0, d = 0, e = 0, f = 0;

    std::array<std::array<double, 3>, 3> normalized() const;
};

NormalizedMatrix normalize_matrix(const Params& p);

/// Vertices O, H, P with the signs of their two eigenvalues inside the N-free
/// face. Directions are named by the edge they point along ("O-H", "O-P", "H-P").
/// Throws DegenerateError when a sign is undetermined.
std::vector<StationaryState> vertex_eigensigns(const Params& p, double tol = kDefaultTol);

/// Stationary states in the open edges O-H, O-P, H-P of the N-free face, with
/// "along" and "transversal" eigen-signs. The O-H state exists iff beta > 0.
std::vector<StationaryState> edge_interior_states(const Params& p, double tol = kDefaultTol);

/// The O-H-P mixed state, if the three existence expressions share one strict
/// sign. Its stability comes from the numeric face Jacobian.
std::optional<StationaryState> face_interior_state(const Params& p, double tol = kDefaultTol);

/// The mixed state with all four strategies, if it lies strictly inside the
/// simplex. Never attractive: the LV Jacobian there has eigenvalue eta*w > 0.
std::optional<StationaryState> full_interior_state(const Params& p, double tol = kDefaultTol);

/// Pure state with the signs of its three invasion eigenvalues in the full simplex.
StationaryState vertex_state(Strategy s, const Params& p, double tol = kDefaultTol);

/// The H-P coexistence state (0, x2*, 1 - x2*, 0) with its three full-simplex
/// eigen-signs: along H-P, toward O, toward N.
StationaryState coexistence_state(const Params& p, double tol = kDefaultTol);

/// Dynamic regime on one face: Bomze phase-portrait number and figure tag.
struct EdgeRegime {
    Face edge = Face::SN;
    int pp = 0;
    std::string figure;
    /// Attractors of the face dynamics, with eigen-signs restricted to the face.
    std::vector<StationaryState> attractors;
};

// Each classifier checks only the preconditions its own face needs and throws
// InvalidParamsError / DegenerateError otherwise.
EdgeRegime classify_edge_sn(const Params& p, double tol = kDefaultTol);
EdgeRegime classify_edge_so(const Params& p, double tol = kDefaultTol);
EdgeRegime classify_edge_sh(const Params& p, double tol = kDefaultTol);
EdgeRegime classify_edge_sp(const Params& p, double tol = kDefaultTol);
EdgeRegime classify_edge(Face f, const Params& p, double tol = kDefaultTol);

enum class GlobalCase {
    PoliteStable,    // beta > -delta, gamma < eps: N, O, P attractive, H iff beta > eta
    PoliteUnstable,  // beta < -delta, gamma > eps: N, O attractive, maybe the H-P state
};
std::string_view to_string(GlobalCase c);

struct RegimeReport {
    Params params;
    ValidationReport validation;
    std::array<EdgeRegime, 4> edges;  // S_N, S_O, S_H, S_P
    std::vector<StationaryState> global_attractors;
    GlobalCase global_case = GlobalCase::PoliteStable;
    WelfareReport welfare;
    bool degenerate = false;
};

/// Composes the four face regimes: a state is attractive in the simplex iff it
/// is attractive in every face containing it. Throws InvalidParamsError or
/// DegenerateError for parameters that do not validate.
RegimeReport classify_global(const Params& p, double tol = kDefaultTol);

WelfareReport welfare_report(const RegimeReport& report, const Params& p, double tol = kDefaultTol);

enum class JacobianSystem {
    ReplicatorFace,  // N-free face, 2 tangent coordinates
    ReplicatorFull,  // whole simplex, 3 tangent coordinates
    Lv2d,
    Lv3d,
};

struct JacobianResult {
    Eigen::MatrixXd matrix;
    /// Columns map local coordinates to ambient coordinates (x1..x4 or y,z,w).
    Eigen::MatrixXd basis;
    /// Sorted by ascending real part; eigenvectors in the same order.
    std::vector<std::complex<double>> eigenvalues;
    std::vector<Eigen::VectorXcd> eigenvectors;
};

/// Central-difference Jacobian at a stationary point, restricted to the
/// tangent space of the chosen system. Throws NonStationaryError if the
/// field's max-norm at `loc` exceeds 1e-10.
JacobianResult numeric_jacobian(const SimplexState& loc, const Params& p,
                                JacobianSystem system = JacobianSystem::ReplicatorFace);
JacobianResult numeric_jacobian(const LVState& loc, const Params& p,
                                JacobianSystem system = JacobianSystem::Lv3d);
/// Same, on an arbitrary face. Tangent basis: e_j - e_i for the face's first
/// strategy i and the other two j.
JacobianResult numeric_face_jacobian(const SimplexState& loc, const Params& p, Face face);

/// Every isolated stationary state on a face, found by solving the
/// equal-payoff system for each support, with stability from the numeric face
/// Jacobian. Used for drawing and as a cross-check of the analytic results.
std::vector<StationaryState> face_stationary_states(const Params& p, Face face,
                                                    double tol = kDefaultTol);

/// Solve Pi_i = c for every i in `support`, shares summing to one, others zero.
/// Returns nullopt when the system is singular.
std::optional<std::pair<std::array<double, 4>, double>> solve_equal_payoff(
    const Params& p, const std::vector<Strategy>& support);

}  // namespace socdyn

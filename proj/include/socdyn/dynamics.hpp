#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "socdyn/model.hpp"
#include "socdyn/stationary.hpp"

namespace socdyn {

using Rates4 = std::array<double, 4>;

/// x_i' = x_i (Pi_i - mean payoff). Components sum to zero.
Rates4 replicator_rhs(const SimplexState& state, const Params& p);
/// Same field on a raw vector; the integrator evaluates it at trial points
/// that need not be exactly on the simplex.
Rates4 replicator_field(const std::array<double, 4>& x, const Params& p);

/// Replicator field on the face without N. Throws InvalidStateError if x4 != 0.
Rates4 face_rhs(const SimplexState& state, const Params& p);

/// Ratio coordinates (x2/x1, x3/x1, x4/x1).
struct LVState {
    double y = 0.0;
    double z = 0.0;
    double w = 0.0;
};

std::array<double, 3> lv_rhs_3d(const LVState& s, const Params& p);
/// The (y, z) subsystem; it does not involve w.
std::array<double, 2> lv_rhs_2d(const std::array<double, 2>& yz, const Params& p);

/// Throws ChartError when x1 == 0.
LVState to_lv(const SimplexState& state);
SimplexState from_lv(const LVState& s);

enum class Method { Rk4, Rk45 };
enum class Verdict { Converged, MaxTimeReached, StepFailure };
std::string_view to_string(Verdict v);

struct IntegratorConfig {
    Method method = Method::Rk45;
    double step = 1e-2;  // fixed step for Rk4, initial step for Rk45
    double abs_tol = 1e-9;
    double rel_tol = 1e-9;
    double max_time = 1e5;
    double convergence_threshold = 1e-10;
    double extinction_floor = 1e-14;
    bool record = true;  // keep every accepted step in the trajectory

    /// Throws std::invalid_argument unless every tolerance is strictly positive.
    void check() const;
};

struct Trajectory {
    std::vector<double> times;
    std::vector<SimplexState> states;
    double terminal_velocity = 0.0;
    Verdict verdict = Verdict::MaxTimeReached;

    const SimplexState& final_state() const { return states.back(); }
    double final_time() const { return times.back(); }
};

/// Integrates until the field's max-norm drops below the convergence threshold,
/// max_time is reached, or the adaptive step underflows. After every accepted
/// step the state is renormalized, shares below the extinction floor are set to
/// exactly zero, and the state is renormalized again if anything was clamped.
/// With record == false only the initial and final samples are kept.
Trajectory integrate(const SimplexState& x0, const Params& p, const IntegratorConfig& cfg);

/// State after exactly `duration` time units (no convergence stop).
/// Throws IntegrationError on step failure.
SimplexState advance(const SimplexState& x0, const Params& p, double duration,
                     const IntegratorConfig& cfg);

/// LV state together with the LV system's own time tau.
struct LVPoint {
    LVState state;
    double tau = 0.0;
};

/// Flows the Lotka-Volterra system for `duration` units of replicator time.
/// The LV field is run under the time change dtau = x1 dt, which is what makes
/// from_lv map its orbits onto replicator trajectories at equal times.
LVPoint advance_lv(const LVPoint& start, const Params& p, double duration,
                   const IntegratorConfig& cfg);

/// Result of matching a trajectory limit against a list of known attractors.
struct AttractorMatch {
    std::optional<std::size_t> index;  // into the candidate list
    std::string label;                 // candidate label or "unresolved"
    Trajectory trajectory;
};

inline constexpr double kDefaultMatchTol = 1e-6;

/// Integrates from x0 and returns the candidate within match_tol (max-norm) of
/// the final state. Throws IntegrationError if the integrator fails.
AttractorMatch find_attractor(const SimplexState& x0, const Params& p, const IntegratorConfig& cfg,
                              std::span<const StationaryState> attractors,
                              double match_tol = kDefaultMatchTol);

/// CSV with header "t,x1,x2,x3,x4", 17 significant digits.
void write_trajectory_csv(std::ostream& os, const Trajectory& traj);

}  // namespace socdyn

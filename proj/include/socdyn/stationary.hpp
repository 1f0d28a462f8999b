#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "socdyn/model.hpp"

namespace socdyn {

enum class StateKind { Vertex, EdgeInterior, FaceInterior, SimplexInterior };
enum class Sign { Negative, Positive, Degenerate };
enum class Stability { Attractive, Saddle, Repulsive, Degenerate };

std::string_view to_string(StateKind k);
std::string_view to_string(Sign s);
std::string_view to_string(Stability s);

/// Sign of v, or Degenerate when |v| <= tol.
Sign sign_of(double v, double tol);

struct EigenSign {
    std::string direction;  // e.g. "O-H", "transversal", "eig1"
    Sign sign = Sign::Degenerate;
};

/// Attractive iff every sign is negative, repulsive iff every sign is positive,
/// saddle otherwise. Any degenerate sign makes the whole verdict degenerate.
Stability stability_from_signs(std::span<const EigenSign> signs);

/// A located equilibrium of the replicator system.
struct StationaryState {
    /// Supporting strategies in O,H,P,N order, e.g. "O", "HP", "OHPN".
    std::string label;
    SimplexState location;
    StateKind kind = StateKind::Vertex;
    std::vector<EigenSign> eigen_signs;
    Stability stability = Stability::Degenerate;
    /// Common payoff of the supporting strategies at the state.
    double payoff = 0.0;
    /// Set for the all-strategy state: the eigenvalue eta * w-bar of the LV system.
    std::optional<double> positive_eigenvalue;

    std::vector<Strategy> support() const;
};

/// Support letters of the strictly positive coordinates of x.
std::string support_label(const SimplexState& x);

StateKind kind_for_support(std::size_t support_size);

}  // namespace socdyn

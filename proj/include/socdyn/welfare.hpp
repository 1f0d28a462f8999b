#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "socdyn/model.hpp"
#include "socdyn/stationary.hpp"

namespace socdyn {

/// Share of H at the H-P coexistence state: (eps - gamma) / (beta + delta + eps - gamma).
double coexistence_share(const Params& p);

/// Common payoff of H and P at the coexistence state,
/// (beta*eps + gamma*delta) / (beta + delta + eps - gamma).
double coexistence_payoff(const Params& p);

/// Payoff an individual receives at a stationary state. Pure states use the
/// diagonal of the payoff table, the H-P state uses the closed form above, any
/// other state its common payoff.
double stationary_payoff(const StationaryState& s, const Params& p);

struct WelfareEntry {
    std::string label;
    double payoff = 0.0;
    /// Equal (within tolerance) to the entry before it; ties are never broken.
    bool tied_with_previous = false;
};

struct WelfareReport {
    std::vector<WelfareEntry> ordering;  // descending payoff
    bool trap_dominated = true;          // N strictly worst among the attractors
    std::vector<std::pair<std::string, std::string>> incomparable_pairs;
};

/// Orders the attractors by payoff and checks the inequalities that must hold
/// for classified attractors: eta strictly below every other attractor payoff,
/// and eps > Pi* > beta, Pi* > eta whenever the H-P state is among them.
/// Throws OrderingViolation if one fails.
WelfareReport welfare_report(std::span<const StationaryState> attractors, const Params& p,
                             double tol = kDefaultTol);

}  // namespace socdyn

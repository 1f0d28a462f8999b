#include "socdyn/welfare.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace socdyn {

double coexistence_share(const Params& p) {
    return (p.epsilon - p.gamma) / (p.beta + p.delta + p.epsilon - p.gamma);
}

double coexistence_payoff(const Params& p) {
    return (p.beta * p.epsilon + p.gamma * p.delta) / (p.beta + p.delta + p.epsilon - p.gamma);
}

double stationary_payoff(const StationaryState& s, const Params& p) {
    if (s.label == "O") return p.alpha;
    if (s.label == "H") return p.beta;
    if (s.label == "P") return p.epsilon;
    if (s.label == "N") return p.eta;
    if (s.label == "HP") return coexistence_payoff(p);
    const auto pi = payoff_vector(s.location, p);
    return pi[index_of(s.support().front())];
}

WelfareReport welfare_report(std::span<const StationaryState> attractors, const Params& p,
                             double tol) {
    WelfareReport w;
    for (const auto& s : attractors)
        w.ordering.push_back({s.label, stationary_payoff(s, p), false});
    std::stable_sort(
        w.ordering.begin(), w.ordering.end(),
        [](const WelfareEntry& a, const WelfareEntry& b) { return a.payoff > b.payoff; });
    for (std::size_t i = 1; i < w.ordering.size(); ++i)
        w.ordering[i].tied_with_previous =
            std::abs(w.ordering[i].payoff - w.ordering[i - 1].payoff) <= tol;

    auto fail = [](const std::string& what) { throw OrderingViolation(what); };
    auto has = [&](const char* label) {
        return std::any_of(attractors.begin(), attractors.end(),
                           [&](const StationaryState& s) { return s.label == label; });
    };

    if (has("N")) {
        for (const auto& e : w.ordering) {
            if (e.label == "N") continue;
            if (!(e.payoff > p.eta + tol)) {
                std::ostringstream msg;
                msg << "attractor " << e.label << " has payoff " << e.payoff
                    << " not above the isolation payoff " << p.eta;
                fail(msg.str());
            }
        }
    }
    w.trap_dominated = true;
    if (has("N") && w.ordering.size() >= 2) {
        const auto& last = w.ordering.back();
        w.trap_dominated = last.label == "N" && !last.tied_with_previous;
    }

    if (has("HP")) {
        const double pi = coexistence_payoff(p);
        if (!(p.epsilon > pi && pi > p.beta))
            fail("coexistence payoff not between beta and epsilon");
        if (!(pi > p.eta)) fail("coexistence payoff not above eta");
    }

    // Attractive pure states O, H, P and the pair (O, coexistence) carry no
    // welfare ranking in the model; their numeric order is reported but flagged.
    const char* unordered[] = {"O", "H", "P", "HP"};
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) {
            const std::string a = unordered[i];
            const std::string b = unordered[j];
            if (b == "HP" && a != "O") continue;
            if (has(a.c_str()) && has(b.c_str())) w.incomparable_pairs.emplace_back(a, b);
        }
    }
    return w;
}

}  // namespace socdyn

#include "socdyn/stationary.hpp"

#include <cmath>

namespace socdyn {

std::string_view to_string(StateKind k) {
    switch (k) {
        case StateKind::Vertex:
            return "vertex";
        case StateKind::EdgeInterior:
            return "edge-interior";
        case StateKind::FaceInterior:
            return "face-interior";
        case StateKind::SimplexInterior:
            return "simplex-interior";
    }
    return "?";
}

std::string_view to_string(Sign s) {
    switch (s) {
        case Sign::Negative:
            return "-";
        case Sign::Positive:
            return "+";
        case Sign::Degenerate:
            return "0";
    }
    return "?";
}

std::string_view to_string(Stability s) {
    switch (s) {
        case Stability::Attractive:
            return "attractive";
        case Stability::Saddle:
            return "saddle";
        case Stability::Repulsive:
            return "repulsive";
        case Stability::Degenerate:
            return "degenerate";
    }
    return "?";
}

Sign sign_of(double v, double tol) {
    if (std::abs(v) <= tol || !std::isfinite(v)) return Sign::Degenerate;
    return v < 0 ? Sign::Negative : Sign::Positive;
}

Stability stability_from_signs(std::span<const EigenSign> signs) {
    if (signs.empty()) return Stability::Degenerate;
    bool any_pos = false;
    bool any_neg = false;
    for (const auto& s : signs) {
        if (s.sign == Sign::Degenerate) return Stability::Degenerate;
        (s.sign == Sign::Positive ? any_pos : any_neg) = true;
    }
    if (any_pos && any_neg) return Stability::Saddle;
    return any_neg ? Stability::Attractive : Stability::Repulsive;
}

std::vector<Strategy> StationaryState::support() const {
    std::vector<Strategy> out;
    for (Strategy s : kAllStrategies)
        if (location.share(s) > 0.0) out.push_back(s);
    return out;
}

std::string support_label(const SimplexState& x) {
    std::string s;
    for (Strategy st : kAllStrategies)
        if (x.share(st) > 0.0) s += letter(st);
    return s;
}

StateKind kind_for_support(std::size_t n) {
    switch (n) {
        case 1:
            return StateKind::Vertex;
        case 2:
            return StateKind::EdgeInterior;
        case 3:
            return StateKind::FaceInterior;
        default:
            return StateKind::SimplexInterior;
    }
}

}  // namespace socdyn

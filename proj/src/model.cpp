#include "socdyn/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace socdyn {

namespace {

std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (const auto& s : items) {
        if (!out.empty()) out += ", ";
        out += s;
    }
    return out;
}

}  // namespace

DegenerateError::DegenerateError(std::vector<std::string> quantities)
    : Error("degenerate (non-robust) parameter configuration: " + join(quantities)),
      quantities_(std::move(quantities)) {}

char letter(Strategy s) noexcept {
    switch (s) {
        case Strategy::O:
            return 'O';
        case Strategy::H:
            return 'H';
        case Strategy::P:
            return 'P';
        case Strategy::N:
            return 'N';
    }
    return '?';
}

double& param_ref(Params& p, std::string_view name) {
    if (name == "alpha") return p.alpha;
    if (name == "beta") return p.beta;
    if (name == "gamma") return p.gamma;
    if (name == "delta") return p.delta;
    if (name == "epsilon") return p.epsilon;
    if (name == "eta") return p.eta;
    throw std::invalid_argument("unknown parameter name '" + std::string(name) + "'");
}

double param_value(const Params& p, std::string_view name) {
    Params copy = p;
    return param_ref(copy, name);
}

SimplexState SimplexState::make(const std::array<double, 4>& x, double sum_tol) {
    std::array<double, 4> y = x;
    double sum = 0.0;
    for (double& v : y) {
        if (!std::isfinite(v)) throw InvalidStateError("non-finite share");
        if (v < 0.0) {
            if (v < -kNegativeClampTol) {
                std::ostringstream msg;
                msg << "negative share " << v;
                throw InvalidStateError(msg.str());
            }
            v = 0.0;
        }
        if (v > 1.0 + sum_tol) throw InvalidStateError("share above one");
        sum += v;
    }
    if (std::abs(sum - 1.0) > sum_tol) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "shares sum to " << sum << ", not 1";
        throw InvalidStateError(msg.str());
    }
    return SimplexState(y);
}

SimplexState SimplexState::vertex(Strategy s) {
    std::array<double, 4> x{};
    x[index_of(s)] = 1.0;
    return SimplexState(x);
}

double max_abs_diff(const SimplexState& a, const SimplexState& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < 4; ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

PayoffMatrix payoff_matrix(const Params& p) {
    return {{
        {p.alpha, 0.0, 0.0, 0.0},
        {0.0, p.beta, p.gamma, 0.0},
        {0.0, -p.delta, p.epsilon, 0.0},
        {p.eta, p.eta, p.eta, p.eta},
    }};
}

std::array<double, 4> payoff_vector(const std::array<double, 4>& x, const Params& p) {
    return {
        p.alpha * x[0],
        p.beta * x[1] + p.gamma * x[2],
        -p.delta * x[1] + p.epsilon * x[2],
        p.eta,
    };
}

std::array<double, 4> payoff_vector(const SimplexState& state, const Params& p) {
    return payoff_vector(state.coords(), p);
}

double average_payoff(const SimplexState& state, const Params& p) {
    const auto pi = payoff_vector(state, p);
    double avg = 0.0;
    for (std::size_t i = 0; i < 4; ++i) avg += state[i] * pi[i];
    return avg;
}

std::string_view to_string(Branch b) {
    return b == Branch::Plus ? "B-plus" : "B-minus";
}

ValidationReport validate(const Params& p, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");

    ValidationReport r;
    auto msg = [&](std::string s) { r.messages.push_back(std::move(s)); };

    const bool finite = std::isfinite(p.alpha) && std::isfinite(p.beta) && std::isfinite(p.gamma) &&
                        std::isfinite(p.delta) && std::isfinite(p.epsilon) && std::isfinite(p.eta);
    if (!finite) {
        msg("parameters must be finite");
        return r;
    }

    r.positivity_ok = p.alpha > 0 && p.delta > 0 && p.epsilon > 0 && p.eta > 0;
    if (p.alpha <= 0) msg("alpha must be positive");
    if (p.delta <= 0) msg("delta must be positive");
    if (p.epsilon <= 0) msg("epsilon must be positive");
    if (p.eta <= 0) msg("eta must be positive");

    const double b_plus_d = p.beta + p.delta;
    const double e_minus_g = p.epsilon - p.gamma;
    const double cross = p.beta * p.epsilon + p.gamma * p.delta;
    const double a_minus_n = p.alpha - p.eta;
    const double e_minus_n = p.epsilon - p.eta;
    const double bg_minus_n = std::max(p.beta, p.gamma) - p.eta;
    const double hp_denominator = e_minus_g + b_plus_d;

    auto check = [&](const char* name, double v) {
        if (std::abs(v) <= tol) r.degenerate_quantities.emplace_back(name);
    };
    check("beta+delta", b_plus_d);
    check("epsilon-gamma", e_minus_g);
    check("beta*epsilon+gamma*delta", cross);
    check("alpha-eta", a_minus_n);
    check("epsilon-eta", e_minus_n);
    check("max(beta,gamma)-eta", bg_minus_n);
    check("beta", p.beta);
    check("beta-eta", p.beta - p.eta);
    check("epsilon-gamma+beta+delta", hp_denominator);
    check("alpha+epsilon", p.alpha + p.epsilon);
    if (std::abs(hp_denominator) > tol)
        check("coexistence-payoff-minus-eta", cross / hp_denominator - p.eta);
    if (std::abs(p.alpha + p.epsilon) > tol)
        check("op-payoff-minus-eta", p.alpha * p.epsilon / (p.alpha + p.epsilon) - p.eta);
    if (p.beta - p.eta > tol) {
        // Only consulted when H-hat can be attractive off the N-free face.
        check("alpha+beta", p.alpha + p.beta);
        if (std::abs(p.alpha + p.beta) > tol)
            check("oh-payoff-minus-eta", p.alpha * p.beta / (p.alpha + p.beta) - p.eta);
    }

    const bool participation_pays = a_minus_n > tol && e_minus_n > tol && bg_minus_n > tol;
    const bool plus = b_plus_d > tol && e_minus_g > tol;
    const bool minus = b_plus_d < -tol && e_minus_g < -tol;
    if (a_minus_n <= tol) msg("alpha > eta fails: O is dominated by N");
    if (e_minus_n <= tol) msg("epsilon > eta fails: P is dominated by N");
    if (bg_minus_n <= tol) msg("max(beta, gamma) > eta fails: H is dominated by N");
    if (!plus && !minus)
        msg("neither (beta > -delta and gamma < epsilon) nor (beta < -delta and gamma > epsilon) "
            "holds");

    r.nondominance_ok = r.positivity_ok && participation_pays && (plus || minus);
    if (r.nondominance_ok) r.branch = plus ? Branch::Plus : Branch::Minus;
    if (r.degenerate()) msg("degenerate quantities: " + join(r.degenerate_quantities));
    return r;
}

ValidationReport require_valid(const Params& p, double tol) {
    ValidationReport r = validate(p, tol);
    if (r.degenerate()) throw DegenerateError(r.degenerate_quantities);
    if (!r.ok()) throw InvalidParamsError("parameters rejected: " + join(r.messages));
    return r;
}

std::string NashFlags::letters() const {
    std::string s;
    for (Strategy st : kAllStrategies)
        if ((*this)[st]) s += letter(st);
    return s;
}

NashFlags nash_vertices(const Params& p, double tol) {
    std::vector<std::string> degenerate;
    auto strict = [&](const char* name, double margin) {
        if (std::abs(margin) <= tol) degenerate.emplace_back(name);
        return margin > tol;
    };
    NashFlags n;
    n.flags[index_of(Strategy::N)] = true;
    n.flags[index_of(Strategy::O)] = strict("alpha-eta", p.alpha - p.eta);
    n.flags[index_of(Strategy::H)] = strict("beta-eta", p.beta - p.eta);
    const bool over_gamma = strict("epsilon-gamma", p.epsilon - p.gamma);
    const bool over_eta = strict("epsilon-eta", p.epsilon - p.eta);
    n.flags[index_of(Strategy::P)] = over_gamma && over_eta;
    if (!degenerate.empty()) throw DegenerateError(std::move(degenerate));
    return n;
}

std::vector<Dominance> dominance_relations(const Params& p) {
    using S = Strategy;
    std::vector<Dominance> out;
    if (p.alpha <= p.eta) out.push_back({S::O, S::N});
    if (p.eta >= std::max(p.beta, p.gamma)) out.push_back({S::H, S::N});
    if (p.beta <= -p.delta && p.gamma <= p.epsilon) out.push_back({S::H, S::P});
    if (p.epsilon <= p.eta) out.push_back({S::P, S::N});
    if (p.beta >= -p.delta && p.gamma >= p.epsilon) out.push_back({S::P, S::H});
    return out;
}

}  // namespace socdyn

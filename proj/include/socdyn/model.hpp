#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "socdyn/errors.hpp"

namespace socdyn {

/// Default tolerance for every strict inequality on parameters.
inline constexpr double kDefaultTol = 1e-9;
/// Allowed drift of the share sum away from one.
inline constexpr double kSimplexSumTol = 1e-9;
/// Negative shares above this are treated as roundoff and clamped to zero.
inline constexpr double kNegativeClampTol = 1e-12;

/// O: offline only, H: online and uncivil, P: online and polite, N: no participation.
enum class Strategy { O = 0, H = 1, P = 2, N = 3 };

inline constexpr std::array<Strategy, 4> kAllStrategies{Strategy::O, Strategy::H, Strategy::P,
                                                        Strategy::N};

constexpr std::size_t index_of(Strategy s) noexcept {
    return static_cast<std::size_t>(s);
}
char letter(Strategy s) noexcept;

/// Payoff rates of one game instance.
///
///   O meets O: alpha     H meets H: beta       H meets P: gamma
///   P meets H: -delta    P meets P: epsilon    N: eta regardless of partner
///
/// alpha, delta, epsilon, eta are positive; beta and gamma have either sign.
struct Params {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double delta = 0.0;
    double epsilon = 0.0;
    double eta = 0.0;

    friend bool operator==(const Params&, const Params&) = default;
};

inline constexpr std::array<std::string_view, 6> kParamNames{"alpha", "beta",    "gamma",
                                                             "delta", "epsilon", "eta"};

/// Access a parameter by its name; throws std::invalid_argument for unknown names.
double& param_ref(Params& p, std::string_view name);
double param_value(const Params& p, std::string_view name);

/// A point (x1, x2, x3, x4) of the 3-simplex: shares of O, H, P, N.
class SimplexState {
public:
    /// Validates membership. Entries in [-1e-12, 0) are clamped to zero; the sum
    /// must be within `sum_tol` of one. Throws InvalidStateError otherwise.
    static SimplexState make(const std::array<double, 4>& x, double sum_tol = kSimplexSumTol);
    static SimplexState make(double x1, double x2, double x3, double x4) {
        return make({x1, x2, x3, x4});
    }
    static SimplexState vertex(Strategy s);

    double operator[](std::size_t i) const { return x_[i]; }
    double share(Strategy s) const { return x_[index_of(s)]; }
    const std::array<double, 4>& coords() const noexcept { return x_; }

    double x1() const { return x_[0]; }
    double x2() const { return x_[1]; }
    double x3() const { return x_[2]; }
    double x4() const { return x_[3]; }

    friend bool operator==(const SimplexState&, const SimplexState&) = default;

private:
    explicit SimplexState(const std::array<double, 4>& x) : x_(x) {}
    std::array<double, 4> x_;
};

double max_abs_diff(const SimplexState& a, const SimplexState& b);

/// The 4x4 payoff table: row = focal strategy, column = homogeneous opponent population.
using PayoffMatrix = std::array<std::array<double, 4>, 4>;
PayoffMatrix payoff_matrix(const Params& p);

/// (Pi_O, Pi_H, Pi_P, Pi_N) at the given state. Reads x1..x3 only.
std::array<double, 4> payoff_vector(const SimplexState& state, const Params& p);
std::array<double, 4> payoff_vector(const std::array<double, 4>& x, const Params& p);

/// Population-wide mean payoff.
double average_payoff(const SimplexState& state, const Params& p);

/// Which of the two admissible non-dominance branches the parameters fall in.
enum class Branch {
    Plus,   // beta > -delta and gamma < epsilon
    Minus,  // beta < -delta and gamma > epsilon
};
std::string_view to_string(Branch b);

struct ValidationReport {
    bool positivity_ok = false;
    bool nondominance_ok = false;
    std::optional<Branch> branch;  // set only when nondominance_ok
    std::vector<std::string> degenerate_quantities;
    std::vector<std::string> messages;

    /// Positivity, non-dominance and no degenerate quantity.
    bool ok() const noexcept {
        return positivity_ok && nondominance_ok && degenerate_quantities.empty();
    }
    bool degenerate() const noexcept { return !degenerate_quantities.empty(); }
};

ValidationReport validate(const Params& p, double tol = kDefaultTol);

/// Throws DegenerateError or InvalidParamsError unless validate(p, tol).ok().
ValidationReport require_valid(const Params& p, double tol = kDefaultTol);

/// Pure states that are strict Nash equilibria, indexed by Strategy.
struct NashFlags {
    std::array<bool, 4> flags{};
    bool operator[](Strategy s) const { return flags[index_of(s)]; }
    std::string letters() const;  // e.g. "OHPN"
};

/// Throws DegenerateError if any defining inequality is within tol of equality.
NashFlags nash_vertices(const Params& p, double tol = kDefaultTol);

struct Dominance {
    Strategy dominated;
    Strategy dominating;
    friend bool operator==(const Dominance&, const Dominance&) = default;
};

/// Weak dominance relations among pure strategies. N is never dominated and O
/// is never compared with H or P.
std::vector<Dominance> dominance_relations(const Params& p);

}  // namespace socdyn

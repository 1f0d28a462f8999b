#include "socdyn/classify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace socdyn {

namespace {

// Eigenvalues from the finite-difference Jacobian carry ~1e-9 of noise.
constexpr double kNumericSignTol = 1e-7;
constexpr double kStationarityTol = 1e-10;

/// Collects precondition failures so that every offending quantity is reported
/// at once.
class Preconditions {
public:
    explicit Preconditions(double tol) : tol_(tol) {}

    void positive(const char* name, double v) {
        if (!(v > 0)) invalid_.push_back(std::string(name) + " must be positive");
    }
    /// margin > 0 required; |margin| <= tol is degenerate.
    void above(const char* name, double margin) {
        if (std::abs(margin) <= tol_)
            degenerate_.emplace_back(name);
        else if (margin < 0)
            invalid_.push_back(std::string(name) + " must be positive");
    }
    /// Records a degeneracy if |v| <= tol; returns v > 0.
    bool sign(const char* name, double v) {
        if (std::abs(v) <= tol_) degenerate_.emplace_back(name);
        return v > 0;
    }
    Branch branch(const Params& p) {
        const double bd = p.beta + p.delta;
        const double eg = p.epsilon - p.gamma;
        const bool bd_deg = std::abs(bd) <= tol_;
        const bool eg_deg = std::abs(eg) <= tol_;
        if (bd_deg) degenerate_.emplace_back("beta+delta");
        if (eg_deg) degenerate_.emplace_back("epsilon-gamma");
        if (!bd_deg && !eg_deg && (bd > 0) != (eg > 0))
            invalid_.emplace_back("beta+delta and epsilon-gamma must share a sign");
        return bd > 0 ? Branch::Plus : Branch::Minus;
    }
    void finish() const {
        if (!degenerate_.empty()) throw DegenerateError(degenerate_);
        if (!invalid_.empty()) {
            std::string msg = "parameters rejected:";
            for (const auto& s : invalid_) msg += " " + s + ";";
            throw InvalidParamsError(msg);
        }
    }

private:
    double tol_;
    std::vector<std::string> degenerate_;
    std::vector<std::string> invalid_;
};

std::string direction(Strategy a, Strategy b) {
    if (index_of(b) < index_of(a)) std::swap(a, b);
    return std::string{letter(a), '-', letter(b)};
}

/// Invasion eigenvalue of strategy j at pure state s: Pi_j(s) - Pi_s(s).
double invasion_rate(Strategy s, Strategy j, const Params& p) {
    const auto a = payoff_matrix(p);
    return a[index_of(j)][index_of(s)] - a[index_of(s)][index_of(s)];
}

StationaryState pure_state(Strategy s, const Params& p, double tol,
                           const std::vector<Strategy>& others) {
    StationaryState st{std::string(1, letter(s)), SimplexState::vertex(s)};
    st.kind = StateKind::Vertex;
    for (Strategy j : others)
        st.eigen_signs.push_back({direction(s, j), sign_of(invasion_rate(s, j, p), tol)});
    st.stability = stability_from_signs(st.eigen_signs);
    st.payoff = payoff_matrix(p)[index_of(s)][index_of(s)];
    return st;
}

StationaryState face_vertex(Strategy s, Face f, const Params& p, double tol) {
    std::vector<Strategy> others;
    for (Strategy j : face_strategies(f))
        if (j != s) others.push_back(j);
    return pure_state(s, p, tol, others);
}

double hp_along_rate(const Params& p) {
    const double bd = p.beta + p.delta;
    const double eg = p.epsilon - p.gamma;
    return bd * eg / (bd + eg);
}

SimplexState coexistence_location(const Params& p) {
    const double x2 = coexistence_share(p);
    if (!(x2 > 0 && x2 < 1)) throw InfeasibleLocationError("H-P coexistence share outside (0, 1)");
    return SimplexState::make({0.0, x2, 1.0 - x2, 0.0});
}

/// H-P state with signs restricted to the face (S_N or S_O).
StationaryState face_coexistence(Face f, const Params& p, double tol) {
    StationaryState st{"HP", coexistence_location(p)};
    st.kind = StateKind::EdgeInterior;
    st.payoff = coexistence_payoff(p);
    st.eigen_signs.push_back({"along H-P", sign_of(hp_along_rate(p), tol)});
    if (f == Face::SN)
        st.eigen_signs.push_back({"toward O", sign_of(-st.payoff, tol)});
    else
        st.eigen_signs.push_back({"toward N", sign_of(p.eta - st.payoff, tol)});
    st.stability = stability_from_signs(st.eigen_signs);
    return st;
}

EdgeRegime make_regime(Face f, int pp, const char* fig,
                       std::initializer_list<std::string_view> labels, const Params& p,
                       double tol) {
    EdgeRegime r{f, pp, fig, {}};
    for (std::string_view label : labels) {
        if (label == "HP") {
            r.attractors.push_back(face_coexistence(f, p, tol));
            continue;
        }
        for (Strategy s : kAllStrategies)
            if (label.front() == letter(s)) r.attractors.push_back(face_vertex(s, f, p, tol));
    }
    return r;
}

Sign numeric_sign(std::complex<double> ev) {
    return sign_of(ev.real(), kNumericSignTol);
}

std::vector<EigenSign> numeric_signs(const JacobianResult& j) {
    std::vector<EigenSign> out;
    for (std::size_t i = 0; i < j.eigenvalues.size(); ++i)
        out.push_back({"eig" + std::to_string(i + 1), numeric_sign(j.eigenvalues[i])});
    return out;
}

using LocalMap = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;

JacobianResult finite_difference(const LocalMap& g, const Eigen::VectorXd& u0,
                                 const Eigen::VectorXd& steps, Eigen::MatrixXd basis) {
    const auto k = u0.size();
    JacobianResult r;
    r.matrix.resize(k, k);
    for (Eigen::Index c = 0; c < k; ++c) {
        Eigen::VectorXd up = u0, dn = u0;
        up(c) += steps(c);
        dn(c) -= steps(c);
        r.matrix.col(c) = (g(up) - g(dn)) / (2.0 * steps(c));
    }
    r.basis = std::move(basis);

    Eigen::EigenSolver<Eigen::MatrixXd> es(r.matrix, true);
    std::vector<Eigen::Index> order(static_cast<std::size_t>(k));
    std::iota(order.begin(), order.end(), 0);
    const auto& vals = es.eigenvalues();
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
        return vals(a).real() < vals(b).real();
    });
    for (auto i : order) {
        r.eigenvalues.push_back(vals(i));
        r.eigenvectors.push_back(es.eigenvectors().col(i));
    }
    return r;
}

/// Jacobian of the replicator field at x restricted to the face spanned by
/// `coords` (first entry is the base vertex).
JacobianResult replicator_jacobian(const SimplexState& loc, const Params& p,
                                   const std::vector<std::size_t>& coords) {
    const auto f0 = replicator_rhs(loc, p);
    double norm = 0.0;
    for (double v : f0) norm = std::max(norm, std::abs(v));
    if (norm > kStationarityTol) {
        std::ostringstream msg;
        msg << "not a stationary point: field max-norm " << norm;
        throw NonStationaryError(msg.str());
    }
    const Eigen::Index k = static_cast<Eigen::Index>(coords.size()) - 1;
    Eigen::MatrixXd basis = Eigen::MatrixXd::Zero(4, k);
    for (Eigen::Index c = 0; c < k; ++c) {
        basis(static_cast<Eigen::Index>(coords[0]), c) = -1.0;
        basis(static_cast<Eigen::Index>(coords[static_cast<std::size_t>(c) + 1]), c) = 1.0;
    }
    const auto base = loc.coords();
    LocalMap g = [&, base](const Eigen::VectorXd& u) {
        std::array<double, 4> x = base;
        for (Eigen::Index r = 0; r < 4; ++r)
            for (Eigen::Index c = 0; c < k; ++c)
                x[static_cast<std::size_t>(r)] += basis(r, c) * u(c);
        const auto f = replicator_field(x, p);
        Eigen::VectorXd out(k);
        for (Eigen::Index c = 0; c < k; ++c) out(c) = f[coords[static_cast<std::size_t>(c) + 1]];
        return out;
    };
    return finite_difference(g, Eigen::VectorXd::Zero(k), Eigen::VectorXd::Constant(k, 1e-6),
                             basis);
}

}  // namespace

std::string_view to_string(Face f) {
    switch (f) {
        case Face::SN:
            return "S_N";
        case Face::SO:
            return "S_O";
        case Face::SH:
            return "S_H";
        case Face::SP:
            return "S_P";
    }
    return "?";
}

Strategy missing_strategy(Face f) {
    switch (f) {
        case Face::SN:
            return Strategy::N;
        case Face::SO:
            return Strategy::O;
        case Face::SH:
            return Strategy::H;
        case Face::SP:
            return Strategy::P;
    }
    return Strategy::N;
}

std::array<Strategy, 3> face_strategies(Face f) {
    std::array<Strategy, 3> out{};
    std::size_t i = 0;
    for (Strategy s : kAllStrategies)
        if (s != missing_strategy(f)) out[i++] = s;
    return out;
}

std::string_view to_string(GlobalCase c) {
    return c == GlobalCase::PoliteStable ? "polite-stable" : "polite-unstable";
}

std::array<std::array<double, 3>, 3> NormalizedMatrix::normalized() const {
    return {{{0.0, 0.0, 0.0}, {a, b, c}, {d, e, f}}};
}

NormalizedMatrix normalize_matrix(const Params& p) {
    NormalizedMatrix m;
    m.source = {{{p.alpha, 0.0, 0.0}, {0.0, p.beta, p.gamma}, {0.0, -p.delta, p.epsilon}}};
    // Adding a constant to a column leaves the dynamics unchanged; subtract row one.
    const auto& s = m.source;
    m.a = s[1][0] - s[0][0];
    m.b = s[1][1] - s[0][1];
    m.c = s[1][2] - s[0][2];
    m.d = s[2][0] - s[0][0];
    m.e = s[2][1] - s[0][1];
    m.f = s[2][2] - s[0][2];
    return m;
}

std::vector<StationaryState> vertex_eigensigns(const Params& p, double tol) {
    const NormalizedMatrix m = normalize_matrix(p);
    auto make = [&](Strategy s, std::vector<EigenSign> signs) {
        StationaryState st{std::string(1, letter(s)), SimplexState::vertex(s)};
        st.kind = StateKind::Vertex;
        st.eigen_signs = std::move(signs);
        st.stability = stability_from_signs(st.eigen_signs);
        st.payoff = payoff_matrix(p)[index_of(s)][index_of(s)];
        return st;
    };
    std::vector<StationaryState> out{
        make(Strategy::O, {{"O-H", sign_of(m.a, tol)}, {"O-P", sign_of(m.d, tol)}}),
        make(Strategy::H, {{"O-H", sign_of(-m.b, tol)}, {"H-P", sign_of(m.e - m.b, tol)}}),
        make(Strategy::P, {{"O-P", sign_of(-m.f, tol)}, {"H-P", sign_of(m.c - m.f, tol)}}),
    };
    std::vector<std::string> degenerate;
    for (const auto& st : out)
        for (const auto& es : st.eigen_signs)
            if (es.sign == Sign::Degenerate) degenerate.push_back(st.label + " " + es.direction);
    if (!degenerate.empty()) throw DegenerateError(degenerate);
    return out;
}

std::vector<StationaryState> edge_interior_states(const Params& p, double tol) {
    Preconditions pre(tol);
    pre.positive("alpha", p.alpha);
    pre.positive("epsilon", p.epsilon);
    const bool beta_pos = pre.sign("beta", p.beta);
    pre.branch(p);
    pre.sign("beta*epsilon+gamma*delta", p.beta * p.epsilon + p.gamma * p.delta);
    pre.finish();

    std::vector<StationaryState> out;
    auto finish = [&](StationaryState st) {
        st.kind = StateKind::EdgeInterior;
        st.stability = stability_from_signs(st.eigen_signs);
        out.push_back(std::move(st));
    };
    if (beta_pos) {
        const double s = p.alpha + p.beta;
        StationaryState st{"OH", SimplexState::make({p.beta / s, p.alpha / s, 0.0, 0.0})};
        st.payoff = p.alpha * p.beta / s;
        st.eigen_signs = {{"along O-H", sign_of(p.alpha, tol)},
                          {"transversal", sign_of(-(p.alpha / p.beta) * (p.beta + p.delta), tol)}};
        finish(std::move(st));
    }
    {
        const double s = p.alpha + p.epsilon;
        StationaryState st{"OP", SimplexState::make({p.epsilon / s, 0.0, p.alpha / s, 0.0})};
        st.payoff = p.alpha * p.epsilon / s;
        st.eigen_signs = {
            {"along O-P", sign_of(p.alpha, tol)},
            {"transversal", sign_of((p.alpha / p.epsilon) * (p.gamma - p.epsilon), tol)}};
        finish(std::move(st));
    }
    {
        const double sum = (p.beta + p.delta) + (p.epsilon - p.gamma);
        StationaryState st{"HP", coexistence_location(p)};
        st.payoff = coexistence_payoff(p);
        st.eigen_signs = {
            {"along H-P", sign_of(hp_along_rate(p), tol)},
            {"transversal", sign_of(-(p.beta * p.epsilon + p.gamma * p.delta) / sum, tol)}};
        finish(std::move(st));
    }
    return out;
}

std::optional<std::pair<std::array<double, 4>, double>> solve_equal_payoff(
    const Params& p, const std::vector<Strategy>& support) {
    const auto a = payoff_matrix(p);
    const auto n = static_cast<Eigen::Index>(support.size());
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n + 1, n + 1);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n + 1);
    for (Eigen::Index r = 0; r < n; ++r) {
        for (Eigen::Index c = 0; c < n; ++c)
            m(r, c) = a[index_of(support[static_cast<std::size_t>(r)])]
                       [index_of(support[static_cast<std::size_t>(c)])];
        m(r, n) = -1.0;
        m(n, r) = 1.0;
    }
    rhs(n) = 1.0;
    Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
    if (!lu.isInvertible()) return std::nullopt;
    const Eigen::VectorXd sol = lu.solve(rhs);
    std::array<double, 4> x{};
    for (Eigen::Index i = 0; i < n; ++i) x[index_of(support[static_cast<std::size_t>(i)])] = sol(i);
    return std::make_pair(x, sol(n));
}

std::optional<StationaryState> face_interior_state(const Params& p, double tol) {
    const double e1 = p.beta * p.epsilon + p.gamma * p.delta;
    const double e2 = p.alpha * (p.beta + p.delta);
    const double e3 = p.alpha * (p.epsilon - p.gamma);
    Preconditions pre(tol);
    pre.sign("beta*epsilon+gamma*delta", e1);
    pre.sign("alpha*(beta+delta)", e2);
    pre.sign("alpha*(epsilon-gamma)", e3);
    pre.finish();
    const bool all_pos = e1 > 0 && e2 > 0 && e3 > 0;
    const bool all_neg = e1 < 0 && e2 < 0 && e3 < 0;
    if (!all_pos && !all_neg) return std::nullopt;

    const auto sol = solve_equal_payoff(p, {Strategy::O, Strategy::H, Strategy::P});
    if (!sol || sol->first[0] <= 0 || sol->first[1] <= 0 || sol->first[2] <= 0)
        throw InfeasibleLocationError("equal-payoff state is not inside the N-free face");
    StationaryState st{"OHP", SimplexState::make(sol->first)};
    st.kind = StateKind::FaceInterior;
    st.payoff = sol->second;
    st.eigen_signs =
        numeric_signs(numeric_jacobian(st.location, p, JacobianSystem::ReplicatorFace));
    st.stability = stability_from_signs(st.eigen_signs);
    return st;
}

std::optional<StationaryState> full_interior_state(const Params& p, double /*tol*/) {
    const auto sol = solve_equal_payoff(p, {Strategy::O, Strategy::H, Strategy::P, Strategy::N});
    if (!sol) return std::nullopt;
    for (double v : sol->first)
        if (!(v > 0)) return std::nullopt;
    StationaryState st{"OHPN", SimplexState::make(sol->first)};
    st.kind = StateKind::SimplexInterior;
    st.payoff = sol->second;
    st.positive_eigenvalue = p.eta * st.location.x4() / st.location.x1();
    st.eigen_signs =
        numeric_signs(numeric_jacobian(st.location, p, JacobianSystem::ReplicatorFull));
    st.stability = stability_from_signs(st.eigen_signs);
    return st;
}

StationaryState vertex_state(Strategy s, const Params& p, double tol) {
    std::vector<Strategy> others;
    for (Strategy j : kAllStrategies)
        if (j != s) others.push_back(j);
    return pure_state(s, p, tol, others);
}

StationaryState coexistence_state(const Params& p, double tol) {
    StationaryState st{"HP", coexistence_location(p)};
    st.kind = StateKind::EdgeInterior;
    st.payoff = coexistence_payoff(p);
    st.eigen_signs = {{"along H-P", sign_of(hp_along_rate(p), tol)},
                      {"toward O", sign_of(-st.payoff, tol)},
                      {"toward N", sign_of(p.eta - st.payoff, tol)}};
    st.stability = stability_from_signs(st.eigen_signs);
    return st;
}

EdgeRegime classify_edge_sn(const Params& p, double tol) {
    Preconditions pre(tol);
    pre.positive("alpha", p.alpha);
    pre.positive("delta", p.delta);
    pre.positive("epsilon", p.epsilon);
    const Branch br = pre.branch(p);
    const bool cross_positive =
        pre.sign("beta*epsilon+gamma*delta", p.beta * p.epsilon + p.gamma * p.delta);
    const bool beta_pos = br == Branch::Plus ? pre.sign("beta", p.beta) : false;
    pre.finish();

    const Face f = Face::SN;
    if (br == Branch::Plus) {
        if (beta_pos)
            return cross_positive ? make_regime(f, 7, "2a", {"O", "H", "P"}, p, tol)
                                  : make_regime(f, 35, "2b", {"O", "H", "P"}, p, tol);
        return cross_positive ? make_regime(f, 9, "2c", {"O", "P"}, p, tol)
                              : make_regime(f, 37, "2d", {"O", "P"}, p, tol);
    }
    return cross_positive ? make_regime(f, 36, "2f", {"O"}, p, tol)
                          : make_regime(f, 11, "2e", {"O", "HP"}, p, tol);
}

EdgeRegime classify_edge_so(const Params& p, double tol) {
    Preconditions pre(tol);
    pre.positive("delta", p.delta);
    pre.positive("epsilon", p.epsilon);
    pre.positive("eta", p.eta);
    const Branch br = pre.branch(p);
    pre.above("epsilon-eta", p.epsilon - p.eta);
    const double denom = p.epsilon - p.gamma + p.beta + p.delta;
    const bool denom_ok = std::abs(denom) > tol;
    if (!denom_ok) pre.sign("epsilon-gamma+beta+delta", denom);
    const bool hp_beats_trap =
        denom_ok && pre.sign("coexistence-payoff-minus-eta",
                             (p.beta * p.epsilon + p.gamma * p.delta) / denom - p.eta);
    const bool beta_above = br == Branch::Plus ? pre.sign("beta-eta", p.beta - p.eta) : false;
    pre.finish();

    const Face f = Face::SO;
    if (br == Branch::Plus) {
        if (beta_above)
            return hp_beats_trap ? make_regime(f, 7, "3a", {"H", "P", "N"}, p, tol)
                                 : make_regime(f, 35, "3b", {"H", "P", "N"}, p, tol);
        return hp_beats_trap ? make_regime(f, 9, "3c", {"P", "N"}, p, tol)
                             : make_regime(f, 37, "3d", {"P", "N"}, p, tol);
    }
    return hp_beats_trap ? make_regime(f, 11, "3e", {"N", "HP"}, p, tol)
                         : make_regime(f, 36, "3f", {"N"}, p, tol);
}

EdgeRegime classify_edge_sh(const Params& p, double tol) {
    Preconditions pre(tol);
    pre.positive("alpha", p.alpha);
    pre.positive("epsilon", p.epsilon);
    pre.positive("eta", p.eta);
    pre.above("alpha-eta", p.alpha - p.eta);
    pre.above("epsilon-eta", p.epsilon - p.eta);
    const bool op_beats_trap =
        pre.sign("op-payoff-minus-eta", p.alpha * p.epsilon / (p.alpha + p.epsilon) - p.eta);
    pre.finish();
    return op_beats_trap ? make_regime(Face::SH, 7, "4a", {"O", "P", "N"}, p, tol)
                         : make_regime(Face::SH, 35, "4b", {"O", "P", "N"}, p, tol);
}

EdgeRegime classify_edge_sp(const Params& p, double tol) {
    Preconditions pre(tol);
    pre.positive("alpha", p.alpha);
    pre.positive("eta", p.eta);
    pre.above("alpha-eta", p.alpha - p.eta);
    const bool beta_above = pre.sign("beta-eta", p.beta - p.eta);
    bool oh_beats_trap = false;
    if (beta_above && std::abs(p.beta - p.eta) > tol)
        oh_beats_trap =
            pre.sign("oh-payoff-minus-eta", p.alpha * p.beta / (p.alpha + p.beta) - p.eta);
    pre.finish();
    if (beta_above)
        return oh_beats_trap ? make_regime(Face::SP, 7, "5a", {"O", "H", "N"}, p, tol)
                             : make_regime(Face::SP, 35, "5b", {"O", "H", "N"}, p, tol);
    return make_regime(Face::SP, 37, "5c", {"O", "N"}, p, tol);
}

EdgeRegime classify_edge(Face f, const Params& p, double tol) {
    switch (f) {
        case Face::SN:
            return classify_edge_sn(p, tol);
        case Face::SO:
            return classify_edge_so(p, tol);
        case Face::SH:
            return classify_edge_sh(p, tol);
        case Face::SP:
            return classify_edge_sp(p, tol);
    }
    throw std::invalid_argument("unknown face");
}

RegimeReport classify_global(const Params& p, double tol) {
    RegimeReport r;
    r.params = p;
    r.validation = require_valid(p, tol);
    r.global_case = *r.validation.branch == Branch::Plus ? GlobalCase::PoliteStable
                                                         : GlobalCase::PoliteUnstable;
    for (std::size_t i = 0; i < 4; ++i) r.edges[i] = classify_edge(kAllFaces[i], p, tol);

    auto attractive_everywhere = [&](const std::string& label) {
        bool seen = false;
        for (const auto& e : r.edges) {
            const char absent = letter(missing_strategy(e.edge));
            if (label.find(absent) != std::string::npos) continue;
            seen = true;
            const bool listed =
                std::any_of(e.attractors.begin(), e.attractors.end(),
                            [&](const StationaryState& s) { return s.label == label; });
            if (!listed) return false;
        }
        return seen;
    };

    for (Strategy s : kAllStrategies) {
        const std::string label(1, letter(s));
        if (attractive_everywhere(label)) r.global_attractors.push_back(vertex_state(s, p, tol));
    }
    if (attractive_everywhere("HP")) r.global_attractors.push_back(coexistence_state(p, tol));

    for (const auto& st : r.global_attractors)
        if (st.stability != Stability::Attractive)
            throw std::logic_error("face composition marked " + st.label +
                                   " attractive but its eigen-signs disagree");
    auto has = [&](const char* label) {
        return std::any_of(r.global_attractors.begin(), r.global_attractors.end(),
                           [&](const StationaryState& s) { return s.label == label; });
    };
    if (!has("O") || !has("N")) throw std::logic_error("O and N must always be attractive");

    r.welfare = welfare_report(r.global_attractors, p, tol);
    return r;
}

WelfareReport welfare_report(const RegimeReport& report, const Params& p, double tol) {
    return welfare_report(std::span<const StationaryState>(report.global_attractors), p, tol);
}

JacobianResult numeric_jacobian(const SimplexState& loc, const Params& p, JacobianSystem system) {
    switch (system) {
        case JacobianSystem::ReplicatorFace:
            return numeric_face_jacobian(loc, p, Face::SN);
        case JacobianSystem::ReplicatorFull:
            return replicator_jacobian(loc, p, {0, 1, 2, 3});
        case JacobianSystem::Lv2d:
        case JacobianSystem::Lv3d:
            return numeric_jacobian(to_lv(loc), p, system);
    }
    throw std::invalid_argument("unknown system");
}

JacobianResult numeric_face_jacobian(const SimplexState& loc, const Params& p, Face face) {
    if (loc.share(missing_strategy(face)) != 0.0)
        throw InvalidStateError(std::string("state is not on face ") +
                                std::string(to_string(face)));
    std::vector<std::size_t> coords;
    for (Strategy s : face_strategies(face)) coords.push_back(index_of(s));
    return replicator_jacobian(loc, p, coords);
}

JacobianResult numeric_jacobian(const LVState& loc, const Params& p, JacobianSystem system) {
    if (system != JacobianSystem::Lv2d && system != JacobianSystem::Lv3d)
        throw std::invalid_argument("LV coordinates need an LV system");
    const bool three = system == JacobianSystem::Lv3d;
    const Eigen::Index k = three ? 3 : 2;

    const auto f0 = lv_rhs_3d(loc, p);
    double norm = std::max(std::abs(f0[0]), std::abs(f0[1]));
    if (three) norm = std::max(norm, std::abs(f0[2]));
    if (norm > kStationarityTol) {
        std::ostringstream msg;
        msg << "not a stationary point of the LV system: field max-norm " << norm;
        throw NonStationaryError(msg.str());
    }

    Eigen::VectorXd u0(k), steps(k);
    const double coords[3] = {loc.y, loc.z, loc.w};
    for (Eigen::Index i = 0; i < k; ++i) {
        u0(i) = coords[i];
        steps(i) = 1e-6 * std::max(1.0, std::abs(coords[i]));
    }
    LocalMap g = [&p, three](const Eigen::VectorXd& u) {
        Eigen::VectorXd out(u.size());
        if (three) {
            const auto d = lv_rhs_3d({u(0), u(1), u(2)}, p);
            out << d[0], d[1], d[2];
        } else {
            const auto d = lv_rhs_2d({u(0), u(1)}, p);
            out << d[0], d[1];
        }
        return out;
    };
    return finite_difference(g, u0, steps, Eigen::MatrixXd::Identity(3, k));
}

std::vector<StationaryState> face_stationary_states(const Params& p, Face face, double /*tol*/) {
    const auto strategies = face_strategies(face);
    std::vector<StationaryState> out;
    for (unsigned mask = 1; mask < 8; ++mask) {
        std::vector<Strategy> support;
        for (unsigned i = 0; i < 3; ++i)
            if (mask & (1u << i)) support.push_back(strategies[i]);
        const auto sol = solve_equal_payoff(p, support);
        if (!sol) continue;
        bool inside = true;
        for (Strategy s : support) inside = inside && sol->first[index_of(s)] > 0.0;
        if (!inside) continue;
        StationaryState st{"", SimplexState::make(sol->first)};
        st.label = support_label(st.location);
        st.kind = kind_for_support(support.size());
        st.payoff = sol->second;
        try {
            st.eigen_signs = numeric_signs(numeric_face_jacobian(st.location, p, face));
            st.stability = stability_from_signs(st.eigen_signs);
        } catch (const NonStationaryError&) {
            st.stability = Stability::Degenerate;
        }
        out.push_back(std::move(st));
    }
    return out;
}

}  // namespace socdyn

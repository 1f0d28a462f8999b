#include "socdyn/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace socdyn {

namespace {

template <std::size_t N>
using Vec = std::array<double, N>;

template <std::size_t N>
double max_norm(const Vec<N>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

template <std::size_t N>
Vec<N> axpy(const Vec<N>& x, double h, const Vec<N>& k) {
    Vec<N> out;
    for (std::size_t i = 0; i < N; ++i) out[i] = x[i] + h * k[i];
    return out;
}

template <std::size_t N, class F>
Vec<N> rk4_step(F&& f, const Vec<N>& x, double h) {
    const Vec<N> k1 = f(x);
    const Vec<N> k2 = f(axpy(x, h / 2, k1));
    const Vec<N> k3 = f(axpy(x, h / 2, k2));
    const Vec<N> k4 = f(axpy(x, h, k3));
    Vec<N> out;
    for (std::size_t i = 0; i < N; ++i)
        out[i] = x[i] + h / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
    return out;
}

template <std::size_t N>
struct EmbeddedStep {
    Vec<N> x;
    double error_ratio;  // <= 1 means accept
};

// Dormand-Prince 5(4) pair.
template <std::size_t N, class F>
EmbeddedStep<N> dopri_step(F&& f, const Vec<N>& x, double h, double abs_tol, double rel_tol) {
    constexpr double a21 = 1.0 / 5;
    constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                     a54 = -212.0 / 729;
    constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                     a65 = -5103.0 / 18656;
    constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                     b6 = 11.0 / 84;
    constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                     e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

    Vec<N> tmp;
    const Vec<N> k1 = f(x);
    for (std::size_t i = 0; i < N; ++i) tmp[i] = x[i] + h * a21 * k1[i];
    const Vec<N> k2 = f(tmp);
    for (std::size_t i = 0; i < N; ++i) tmp[i] = x[i] + h * (a31 * k1[i] + a32 * k2[i]);
    const Vec<N> k3 = f(tmp);
    for (std::size_t i = 0; i < N; ++i)
        tmp[i] = x[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    const Vec<N> k4 = f(tmp);
    for (std::size_t i = 0; i < N; ++i)
        tmp[i] = x[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    const Vec<N> k5 = f(tmp);
    for (std::size_t i = 0; i < N; ++i)
        tmp[i] = x[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
    const Vec<N> k6 = f(tmp);
    Vec<N> out;
    for (std::size_t i = 0; i < N; ++i)
        out[i] = x[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
    const Vec<N> k7 = f(out);

    double ratio = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
        const double err =
            h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
        const double scale = abs_tol + rel_tol * std::max(std::abs(x[i]), std::abs(out[i]));
        ratio = std::max(ratio, std::abs(err) / scale);
    }
    if (!std::isfinite(ratio)) ratio = std::numeric_limits<double>::infinity();
    return {out, ratio};
}

double next_step(double h, double ratio) {
    if (ratio == 0.0) return h * 5.0;
    const double factor = 0.9 * std::pow(ratio, -0.2);
    return h * std::clamp(factor, 0.2, 5.0);
}

bool step_underflow(double h, double t) {
    return h < 1e-14 * std::max(1.0, std::abs(t));
}

/// Largest |Pi_i - mean| over the present strategies. Near a vertex these are
/// the decay rates of the absent shares; keeping h times this at most one
/// stops the adaptive step from parking a share at the tolerance noise level.
double growth_rate_bound(const Vec<4>& x, const Params& p) {
    const auto pi = payoff_vector(x, p);
    const double avg = x[0] * pi[0] + x[1] * pi[1] + x[2] * pi[2] + x[3] * pi[3];
    double m = 0.0;
    for (std::size_t i = 0; i < 4; ++i)
        if (x[i] != 0.0) m = std::max(m, std::abs(pi[i] - avg));
    return m;
}

/// Renormalize, clamp shares below the floor to zero, renormalize again if needed.
Vec<4> project(Vec<4> x, double floor) {
    double sum = x[0] + x[1] + x[2] + x[3];
    for (double& v : x) v /= sum;
    bool clamped = false;
    for (double& v : x) {
        if (v < floor && v != 0.0) {
            v = 0.0;
            clamped = true;
        }
    }
    if (clamped) {
        sum = x[0] + x[1] + x[2] + x[3];
        for (double& v : x) v /= sum;
    }
    return x;
}

/// Generic fixed-duration driver. `post` is applied to every accepted state.
template <std::size_t N, class F, class Post>
Vec<N> run_to(F&& f, Post&& post, Vec<N> x, double duration, const IntegratorConfig& cfg) {
    double t = 0.0;
    double h = std::min(cfg.step, duration);
    while (t < duration) {
        const double remaining = duration - t;
        const bool last = h >= remaining;
        const double hh = last ? remaining : h;
        if (cfg.method == Method::Rk4) {
            x = post(rk4_step<N>(f, x, hh));
            t = last ? duration : t + hh;
            continue;
        }
        const auto step = dopri_step<N>(f, x, hh, cfg.abs_tol, cfg.rel_tol);
        if (step.error_ratio <= 1.0) {
            x = post(step.x);
            t = last ? duration : t + hh;
            if (!last) h = next_step(hh, step.error_ratio);
        } else {
            h = next_step(hh, step.error_ratio);
            if (step_underflow(h, t)) throw IntegrationError("adaptive step size underflow");
        }
    }
    return x;
}

}  // namespace

Rates4 replicator_field(const std::array<double, 4>& x, const Params& p) {
    const auto pi = payoff_vector(x, p);
    const double avg = x[0] * pi[0] + x[1] * pi[1] + x[2] * pi[2] + x[3] * pi[3];
    return {x[0] * (pi[0] - avg), x[1] * (pi[1] - avg), x[2] * (pi[2] - avg), x[3] * (pi[3] - avg)};
}

Rates4 replicator_rhs(const SimplexState& state, const Params& p) {
    return replicator_field(state.coords(), p);
}

Rates4 face_rhs(const SimplexState& state, const Params& p) {
    if (state.x4() != 0.0) throw InvalidStateError("face_rhs requires x4 == 0");
    return replicator_field(state.coords(), p);
}

std::array<double, 3> lv_rhs_3d(const LVState& s, const Params& p) {
    const auto yz = lv_rhs_2d({s.y, s.z}, p);
    return {yz[0], yz[1], s.w * (-p.alpha + p.eta * (1.0 + s.y + s.z + s.w))};
}

std::array<double, 2> lv_rhs_2d(const std::array<double, 2>& yz, const Params& p) {
    const double y = yz[0];
    const double z = yz[1];
    return {y * (-p.alpha + p.beta * y + p.gamma * z),
            z * (-p.alpha - p.delta * y + p.epsilon * z)};
}

LVState to_lv(const SimplexState& state) {
    if (state.x1() == 0.0) throw ChartError("ratio coordinates are undefined on the face x1 = 0");
    return {state.x2() / state.x1(), state.x3() / state.x1(), state.x4() / state.x1()};
}

SimplexState from_lv(const LVState& s) {
    if (s.y < 0 || s.z < 0 || s.w < 0) throw InvalidStateError("negative ratio coordinate");
    const double n = 1.0 + s.y + s.z + s.w;
    // Exact shares can miss a unit sum by a few ulps; make() tolerates that.
    return SimplexState::make({1.0 / n, s.y / n, s.z / n, s.w / n});
}

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Converged:
            return "converged";
        case Verdict::MaxTimeReached:
            return "max-time-reached";
        case Verdict::StepFailure:
            return "step-failure";
    }
    return "?";
}

void IntegratorConfig::check() const {
    if (!(step > 0) || !(abs_tol > 0) || !(rel_tol > 0) || !(max_time > 0) ||
        !(convergence_threshold > 0) || !(extinction_floor > 0))
        throw std::invalid_argument("integrator tolerances, step and max_time must be positive");
}

Trajectory integrate(const SimplexState& x0, const Params& p, const IntegratorConfig& cfg) {
    cfg.check();
    auto field = [&p](const Vec<4>& x) { return replicator_field(x, p); };

    Trajectory traj;
    Vec<4> x = x0.coords();
    double t = 0.0;
    traj.times.push_back(t);
    traj.states.push_back(x0);

    double velocity = max_norm(field(x));
    double h = std::min(cfg.step, cfg.max_time);
    traj.verdict = Verdict::MaxTimeReached;
    if (velocity < cfg.convergence_threshold) traj.verdict = Verdict::Converged;

    while (traj.verdict == Verdict::MaxTimeReached && t < cfg.max_time) {
        double hh = std::min(h, cfg.max_time - t);
        if (cfg.method == Method::Rk45) {
            const double rate = growth_rate_bound(x, p);
            if (rate * hh > 1.0) hh = 1.0 / rate;
        }
        Vec<4> next;
        if (cfg.method == Method::Rk4) {
            next = rk4_step<4>(field, x, hh);
        } else {
            const auto step = dopri_step<4>(field, x, hh, cfg.abs_tol, cfg.rel_tol);
            if (step.error_ratio > 1.0) {
                h = next_step(hh, step.error_ratio);
                if (step_underflow(h, t)) {
                    traj.verdict = Verdict::StepFailure;
                    break;
                }
                continue;
            }
            next = step.x;
            h = next_step(hh, step.error_ratio);
        }
        x = project(next, cfg.extinction_floor);
        t = (hh == cfg.max_time - t) ? cfg.max_time : t + hh;
        velocity = max_norm(field(x));
        if (velocity < cfg.convergence_threshold) traj.verdict = Verdict::Converged;
        if (cfg.record) {
            traj.times.push_back(t);
            traj.states.push_back(SimplexState::make(x));
        }
    }

    if (!cfg.record && t > 0.0) {
        traj.times.push_back(t);
        traj.states.push_back(SimplexState::make(x));
    }
    traj.terminal_velocity = velocity;
    return traj;
}

SimplexState advance(const SimplexState& x0, const Params& p, double duration,
                     const IntegratorConfig& cfg) {
    cfg.check();
    if (duration < 0) throw std::invalid_argument("duration must be nonnegative");
    if (duration == 0) return x0;
    auto field = [&p](const Vec<4>& x) { return replicator_field(x, p); };
    auto post = [&cfg](const Vec<4>& x) { return project(x, cfg.extinction_floor); };
    return SimplexState::make(run_to<4>(field, post, x0.coords(), duration, cfg));
}

LVPoint advance_lv(const LVPoint& start, const Params& p, double duration,
                   const IntegratorConfig& cfg) {
    cfg.check();
    if (duration < 0) throw std::invalid_argument("duration must be nonnegative");
    // (y, z, w, tau) in replicator time: d/dt = x1 * d/dtau, x1 = 1 / (1 + y + z + w).
    auto field = [&p](const Vec<4>& s) {
        const auto d = lv_rhs_3d({s[0], s[1], s[2]}, p);
        const double x1 = 1.0 / (1.0 + s[0] + s[1] + s[2]);
        return Vec<4>{d[0] * x1, d[1] * x1, d[2] * x1, x1};
    };
    auto identity = [](const Vec<4>& s) { return s; };
    const Vec<4> end =
        run_to<4>(field, identity, Vec<4>{start.state.y, start.state.z, start.state.w, start.tau},
                  duration, cfg);
    return {{end[0], end[1], end[2]}, end[3]};
}

AttractorMatch find_attractor(const SimplexState& x0, const Params& p, const IntegratorConfig& cfg,
                              std::span<const StationaryState> attractors, double match_tol) {
    AttractorMatch m;
    m.trajectory = integrate(x0, p, cfg);
    if (m.trajectory.verdict == Verdict::StepFailure)
        throw IntegrationError("integration failed: adaptive step size underflow");
    const SimplexState& end = m.trajectory.final_state();
    double best = match_tol;
    for (std::size_t i = 0; i < attractors.size(); ++i) {
        const double d = max_abs_diff(end, attractors[i].location);
        if (d <= best) {
            best = d;
            m.index = i;
        }
    }
    m.label = m.index ? attractors[*m.index].label : "unresolved";
    return m;
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
    const auto old = os.precision(17);
    os << "t,x1,x2,x3,x4\n";
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        const auto& x = traj.states[i];
        os << traj.times[i] << ',' << x[0] << ',' << x[1] << ',' << x[2] << ',' << x[3] << '\n';
    }
    os.precision(old);
}

}  // namespace socdyn

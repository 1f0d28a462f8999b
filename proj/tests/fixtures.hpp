#pragma once

#include <random>

#include <Eigen/Dense>

#include "socdyn/classify.hpp"
#include "socdyn/model.hpp"

namespace fixtures {

inline const socdyn::Params kSetA{2.0, 1.0, 1.0, 1.0, 2.0, 0.5};
inline const socdyn::Params kSetB{2.0, -2.0, 1.5, 1.0, 1.0, 0.2};
inline const socdyn::Params kSetC{2.0, -0.5, 1.2, 1.0, 2.0, 0.3};
inline const socdyn::Params kSetD{2.0, 1.0, 2.0, 1.0, 2.0, 0.5};

/// Random parameters in the requested branch that pass validation.
inline socdyn::Params draw_params(std::mt19937_64& rng, socdyn::Branch branch) {
    auto u = [&](double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng);
    };
    while (true) {
        socdyn::Params p;
        p.alpha = u(0.3, 3.0);
        p.delta = u(0.2, 2.0);
        p.epsilon = u(0.3, 3.0);
        if (branch == socdyn::Branch::Plus) {
            p.beta = u(-p.delta, 3.0);
            p.gamma = u(-2.0, p.epsilon);
        } else {
            p.beta = u(-p.delta - 3.0, -p.delta);
            p.gamma = u(p.epsilon, p.epsilon + 3.0);
        }
        const double cap = std::min({p.alpha, p.epsilon, std::max(p.beta, p.gamma)});
        if (cap <= 0.02) continue;
        p.eta = u(0.01, cap);
        const auto v = socdyn::validate(p, 1e-6);
        if (v.ok() && v.branch == branch) return p;
    }
}

inline socdyn::Params draw_params(std::mt19937_64& rng) {
    return draw_params(rng, rng() % 2 ? socdyn::Branch::Plus : socdyn::Branch::Minus);
}

/// Tangent coordinates of an ambient displacement for the full-simplex
/// Jacobian, whose basis columns are e_j - e_O for j = H, P, N.
inline Eigen::VectorXd tangent(const Eigen::Vector4d& d) {
    return d.tail<3>();
}

/// Covector reading the share of strategy k in the same tangent coordinates.
inline Eigen::VectorXd share_covector(std::size_t k) {
    Eigen::VectorXd l = Eigen::VectorXd::Zero(3);
    if (k == 0)
        l.setConstant(-1.0);
    else
        l(static_cast<Eigen::Index>(k) - 1) = 1.0;
    return l;
}

/// Eigenvalue for a right eigenvector v, with the residual |Jv - lambda v|.
inline std::pair<double, double> right_rate(const Eigen::MatrixXd& j, const Eigen::VectorXd& v) {
    const double lambda = v.dot(j * v) / v.dot(v);
    return {lambda, (j * v - lambda * v).norm() / v.norm()};
}

/// Eigenvalue for a left eigenvector l, with the residual |l^T J - lambda l^T|.
inline std::pair<double, double> left_rate(const Eigen::MatrixXd& j, const Eigen::VectorXd& l) {
    const Eigen::VectorXd lj = j.transpose() * l;
    const double lambda = l.dot(lj) / l.dot(l);
    return {lambda, (lj - lambda * l).norm() / l.norm()};
}

inline Eigen::Vector4d unit(socdyn::Strategy s) {
    Eigen::Vector4d e = Eigen::Vector4d::Zero();
    e(static_cast<Eigen::Index>(socdyn::index_of(s))) = 1.0;
    return e;
}

}  // namespace fixtures

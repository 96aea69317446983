#pragma once

#include <utility>

#include <Eigen/Dense>

#include "pinsync/control.hpp"
#include "pinsync/network.hpp"

namespace pinsync {

// Per-node oscillator parameters: a base (alpha, omega) pair plus optional
// per-node offsets. Empty offset arrays mean homogeneous nodes.
struct SLParams {
    double alpha = 1.0;          // bifurcation parameter; limit cycle radius sqrt(alpha)
    double omega = 1.0;          // natural frequency, rad per time unit
    Eigen::ArrayXd delta_alpha;  // per-node offsets, empty or length n
    Eigen::ArrayXd delta_omega;
    double heterogeneity_limit = 0.1; // max |offset| relative to the base value

    // alpha > 0 and offsets within heterogeneity_limit * base. Throws ConfigError.
    void validate(int n) const;

    bool heterogeneous() const { return delta_alpha.size() > 0 || delta_omega.size() > 0; }
    Eigen::ArrayXd alphas(int n) const;
    Eigen::ArrayXd omegas(int n) const;
};

// Linear coupling through a 2x2 matrix, stored as strength times unit
// pattern so the effective matrix epsilon * d_unit is exactly
// reconstructible from its parts.
struct CouplingMatrix {
    double epsilon = 0.0;
    Eigen::Matrix2d d_unit = (Eigen::Matrix2d() << 1.0, -1.0, 1.0, 1.0).finished();

    Eigen::Matrix2d effective() const { return epsilon * d_unit; }
};

// Full-model state layout: [x_0 .. x_{n-1}, y_0 .. y_{n-1}].
using StateVec = Eigen::VectorXd;

// Velocity of one isolated oscillator:
//   dx = alpha x - omega y - (x^2 + y^2) x
//   dy = omega x + alpha y - (x^2 + y^2) y
std::pair<double, double> sl_vector_field(double x, double y, double alpha, double omega);

// Throws NumericalError naming the first offending node and the time if any
// state entry is NaN or infinite.
void require_finite_state(const StateVec& state, double t);

// Coupled network without control:
//   dX_i = F(X_i) + epsilon * d_unit * sum_j L_ij X_j
// t is only used to label non-finite-state diagnostics.
StateVec network_rhs(const StateVec& state, const Network& net, const SLParams& params,
                     const CouplingMatrix& coupling, double t = 0.0);

// Additive pinning: network_rhs plus (lambda_i, lambda_i) on pinned rows
// while the control window [0, t_p] is open.
StateVec additive_pinned_rhs(const StateVec& state, const Network& net, const SLParams& params,
                             const CouplingMatrix& coupling, const PinningSchedule& schedule, double t);

// Parametric pinning: same structure as network_rhs, but pinned nodes run at
// frequency omega_p_i while the window is open and return to omega after.
StateVec parametric_pinned_rhs(const StateVec& state, const Network& net, const SLParams& params,
                               const CouplingMatrix& coupling, const PinningSchedule& schedule, double t);

} // namespace pinsync

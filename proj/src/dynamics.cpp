#include "pinsync/dynamics.hpp"

#include <cmath>
#include <string>

#include "pinsync/errors.hpp"

namespace pinsync {

void SLParams::validate(int n) const {
    if (!(alpha > 0.0))
        throw ConfigError("oscillator.alpha must be positive (stable limit cycle regime)");
    if (!std::isfinite(alpha) || !std::isfinite(omega))
        throw ConfigError("oscillator parameters must be finite");
    if (!(heterogeneity_limit > 0.0))
        throw ConfigError("oscillator.heterogeneity_limit must be positive");
    const auto check_offsets = [&](const Eigen::ArrayXd& d, double base, const char* name) {
        if (d.size() == 0)
            return;
        if (d.size() != n)
            throw ConfigError(std::string(name) + ": expected " + std::to_string(n) + " entries, got " +
                              std::to_string(d.size()));
        const double bound = heterogeneity_limit * std::abs(base);
        for (int i = 0; i < n; ++i) {
            if (!std::isfinite(d[i]))
                throw ConfigError(std::string(name) + "[" + std::to_string(i) + "] is not finite");
            if (std::abs(d[i]) > bound)
                throw ConfigError(std::string(name) + "[" + std::to_string(i) +
                                  "] exceeds the heterogeneity limit " + std::to_string(bound));
        }
    };
    check_offsets(delta_alpha, alpha, "oscillator.delta_alpha");
    check_offsets(delta_omega, omega, "oscillator.delta_omega");
}

Eigen::ArrayXd SLParams::alphas(int n) const {
    if (delta_alpha.size() == 0)
        return Eigen::ArrayXd::Constant(n, alpha);
    return alpha + delta_alpha;
}

Eigen::ArrayXd SLParams::omegas(int n) const {
    if (delta_omega.size() == 0)
        return Eigen::ArrayXd::Constant(n, omega);
    return omega + delta_omega;
}

std::pair<double, double> sl_vector_field(double x, double y, double alpha, double omega) {
    const double r2 = x * x + y * y;
    return {alpha * x - omega * y - r2 * x, omega * x + alpha * y - r2 * y};
}

void require_finite_state(const StateVec& state, double t) {
    if (state.allFinite())
        return;
    const long n = state.size() / 2;
    for (long i = 0; i < state.size(); ++i) {
        if (!std::isfinite(state[i])) {
            const long node = n > 0 ? i % n : i;
            throw NumericalError("non-finite state at node " + std::to_string(node) + ", t = " +
                                 std::to_string(t));
        }
    }
}

namespace {

// Shared core: per-node vector field with an arbitrary frequency array plus
// the diffusive coupling term.
StateVec coupled_rhs(const StateVec& state, const Network& net, const Eigen::ArrayXd& alphas,
                     const Eigen::ArrayXd& omegas, const CouplingMatrix& coupling, double t) {
    const int n = net.n();
    if (state.size() != 2 * n)
        throw ConfigError("state has " + std::to_string(state.size()) + " entries for a network of " +
                          std::to_string(n) + " nodes");
    require_finite_state(state, t);

    const auto x = state.head(n).array();
    const auto y = state.tail(n).array();
    const Eigen::ArrayXd r2 = x.square() + y.square();

    StateVec deriv(2 * n);
    deriv.head(n).array() = alphas * x - omegas * y - r2 * x;
    deriv.tail(n).array() = omegas * x + alphas * y - r2 * y;

    const Eigen::Matrix2d& d = coupling.d_unit;
    const Eigen::VectorXd u = (d(0, 0) * x + d(0, 1) * y).matrix();
    const Eigen::VectorXd v = (d(1, 0) * x + d(1, 1) * y).matrix();
    deriv.head(n).noalias() += coupling.epsilon * (net.laplacian() * u);
    deriv.tail(n).noalias() += coupling.epsilon * (net.laplacian() * v);
    return deriv;
}

} // namespace

StateVec network_rhs(const StateVec& state, const Network& net, const SLParams& params,
                     const CouplingMatrix& coupling, double t) {
    const int n = net.n();
    return coupled_rhs(state, net, params.alphas(n), params.omegas(n), coupling, t);
}

StateVec additive_pinned_rhs(const StateVec& state, const Network& net, const SLParams& params,
                             const CouplingMatrix& coupling, const PinningSchedule& schedule, double t) {
    const int n = net.n();
    StateVec deriv = coupled_rhs(state, net, params.alphas(n), params.omegas(n), coupling, t);
    if (control_window_active(t, schedule.t_p)) {
        for (int p = 0; p < schedule.n_pinned(); ++p) {
            const int node = schedule.pinned[p];
            const double u = schedule.magnitudes[p];
            deriv[node] += u;      // same input on both components
            deriv[n + node] += u;
        }
    }
    return deriv;
}

StateVec parametric_pinned_rhs(const StateVec& state, const Network& net, const SLParams& params,
                               const CouplingMatrix& coupling, const PinningSchedule& schedule, double t) {
    const int n = net.n();
    Eigen::ArrayXd omegas = params.omegas(n);
    if (control_window_active(t, schedule.t_p)) {
        for (int p = 0; p < schedule.n_pinned(); ++p)
            omegas[schedule.pinned[p]] = schedule.magnitudes[p];
    }
    return coupled_rhs(state, net, params.alphas(n), omegas, coupling, t);
}

} // namespace pinsync

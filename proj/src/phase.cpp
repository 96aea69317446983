#include "pinsync/phase.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "pinsync/errors.hpp"

namespace pinsync {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double wrap_phase(double theta) {
    double w = std::fmod(theta, kTwoPi);
    if (w < 0.0)
        w += kTwoPi;
    if (w >= kTwoPi) // fmod can land exactly on 2*pi after the correction
        w = 0.0;
    return w;
}

double circular_distance(double a, double b) {
    const double d = std::fmod(std::abs(a - b), kTwoPi);
    return std::min(d, kTwoPi - d);
}

std::pair<double, double> psf_eval(double theta, double alpha) {
    if (!(alpha > 0.0))
        throw ConfigError("psf_eval: alpha must be positive");
    const double inv = 1.0 / std::sqrt(alpha);
    return {-inv * std::sin(theta), inv * std::cos(theta)};
}

double phase_of_state(double x, double y) {
    if (x == 0.0 && y == 0.0)
        throw ConfigError("phase_of_state: phase is undefined at the origin");
    return wrap_phase(std::atan2(y, x));
}

PhaseVec phase_rhs_with_frequencies(const PhaseVec& phases, const Network& net,
                                    const Eigen::ArrayXd& frequencies, double epsilon) {
    const int n = net.n();
    if (phases.size() != n)
        throw ConfigError("phase state has " + std::to_string(phases.size()) +
                          " entries for a network of " + std::to_string(n) + " nodes");
    if (frequencies.size() != n)
        throw ConfigError("frequency array has " + std::to_string(frequencies.size()) +
                          " entries for a network of " + std::to_string(n) + " nodes");

    // sum_j A_ij sin(theta_j - theta_i)
    //   = cos(theta_i) * (A sin(theta))_i - sin(theta_i) * (A cos(theta))_i
    const Eigen::ArrayXd s = phases.sin();
    const Eigen::ArrayXd c = phases.cos();
    const Eigen::VectorXd as = net.adjacency() * s.matrix();
    const Eigen::VectorXd ac = net.adjacency() * c.matrix();
    return frequencies + epsilon * (c * as.array() - s * ac.array());
}

PhaseVec kuramoto_rhs(const PhaseVec& phases, const Network& net, double omega, double epsilon) {
    return phase_rhs_with_frequencies(phases, net, Eigen::ArrayXd::Constant(net.n(), omega), epsilon);
}

PhaseVec kuramoto_rhs(const PhaseVec& phases, const Network& net, const Eigen::ArrayXd& omegas,
                      double epsilon) {
    return phase_rhs_with_frequencies(phases, net, omegas, epsilon);
}

PhaseVec kuramoto_additive_pinned_rhs(const PhaseVec& phases, const Network& net,
                                      const Eigen::ArrayXd& omegas, double epsilon,
                                      const PinningSchedule& schedule, double t) {
    Eigen::ArrayXd freqs = omegas;
    if (control_window_active(t, schedule.t_p)) {
        for (int p = 0; p < schedule.n_pinned(); ++p) {
            const int node = schedule.pinned[p];
            freqs[node] = omegas[node] + schedule.magnitudes[p];
        }
    }
    return phase_rhs_with_frequencies(phases, net, freqs, epsilon);
}

PhaseVec kuramoto_parametric_pinned_rhs(const PhaseVec& phases, const Network& net,
                                        const Eigen::ArrayXd& omegas, double epsilon,
                                        const PinningSchedule& schedule, double t) {
    Eigen::ArrayXd freqs = omegas;
    if (control_window_active(t, schedule.t_p)) {
        for (int p = 0; p < schedule.n_pinned(); ++p)
            freqs[schedule.pinned[p]] = schedule.magnitudes[p];
    }
    return phase_rhs_with_frequencies(phases, net, freqs, epsilon);
}

double psf_projected_pin_term(double theta, double lambda, double alpha) {
    if (!(alpha > 0.0))
        throw ConfigError("psf_projected_pin_term: alpha must be positive");
    return std::sqrt(2.0 / alpha) * lambda * std::cos(theta + std::numbers::pi / 4.0);
}

double equivalent_parametric_frequency(const std::vector<double>& times,
                                       const std::vector<double>& thetas, double lambda, double alpha,
                                       double omega, double t_p) {
    if (!(t_p > 0.0))
        throw ConfigError("equivalent_parametric_frequency: t_p must be positive");
    if (times.size() != thetas.size())
        throw ConfigError("equivalent_parametric_frequency: times and phases differ in length");
    const std::size_t count = times.size();
    if (count < 2)
        throw ConfigError("equivalent_parametric_frequency: need at least two samples");

    const double mean_step = (times.back() - times.front()) / static_cast<double>(count - 1);
    if (!(mean_step > 0.0))
        throw ConfigError("equivalent_parametric_frequency: times must be increasing");
    for (std::size_t k = 0; k + 1 < count; ++k) {
        const double h = times[k + 1] - times[k];
        if (std::abs(h - mean_step) > 1e-9 * mean_step)
            throw ConfigError("equivalent_parametric_frequency: sample spacing is not uniform at index " +
                              std::to_string(k));
    }
    if (std::abs(times.front()) > 1e-9 * t_p || std::abs(times.back() - t_p) > 1e-9 * t_p)
        throw ConfigError("equivalent_parametric_frequency: samples must cover [0, t_p]");

    double integral = 0.0;
    double prev = psf_projected_pin_term(thetas[0], lambda, alpha);
    for (std::size_t k = 1; k < count; ++k) {
        const double cur = psf_projected_pin_term(thetas[k], lambda, alpha);
        integral += 0.5 * (times[k] - times[k - 1]) * (prev + cur);
        prev = cur;
    }
    return omega + integral / t_p;
}

} // namespace pinsync

#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "pinsync/control.hpp"
#include "pinsync/network.hpp"

namespace pinsync {

// Phase-model state: one angle per node. Integration accumulates unwrapped
// values; wrap_phase is applied at reporting boundaries only.
using PhaseVec = Eigen::ArrayXd;

// theta reduced into [0, 2*pi).
double wrap_phase(double theta);

// Circular distance between two angles, in [0, pi].
double circular_distance(double a, double b);

// Phase sensitivity function of the limit cycle with radius sqrt(alpha):
//   Z(theta) = (1/sqrt(alpha)) * (-sin theta, cos theta)
// normalized so that Z(theta) . F(X(theta)) = omega on the cycle.
std::pair<double, double> psf_eval(double theta, double alpha);

// Polar angle of (x, y) in [0, 2*pi). For this oscillator the isochrons are
// radial (the radial and angular dynamics decouple), so the polar angle is
// the asymptotic phase. Rejects the origin, where the phase is undefined.
double phase_of_state(double x, double y);

// Shared RHS core: theta_dot_i = freq_i + epsilon * sum_j A_ij sin(theta_j - theta_i).
// Both pinned variants below are thin wrappers that only change freq_i, so
// matched additive/parametric schedules produce bit-identical derivatives.
PhaseVec phase_rhs_with_frequencies(const PhaseVec& phases, const Network& net,
                                    const Eigen::ArrayXd& frequencies, double epsilon);

// Kuramoto model with a common (or per-node) natural frequency.
PhaseVec kuramoto_rhs(const PhaseVec& phases, const Network& net, double omega, double epsilon);
PhaseVec kuramoto_rhs(const PhaseVec& phases, const Network& net, const Eigen::ArrayXd& omegas,
                      double epsilon);

// Additive pinning on the phase model: pinned rows run at omega_i + lambda_i
// while the window [0, t_p] is open.
PhaseVec kuramoto_additive_pinned_rhs(const PhaseVec& phases, const Network& net,
                                      const Eigen::ArrayXd& omegas, double epsilon,
                                      const PinningSchedule& schedule, double t);

// Parametric pinning on the phase model: pinned rows run at omega_p_i while
// the window is open and return to omega_i after.
PhaseVec kuramoto_parametric_pinned_rhs(const PhaseVec& phases, const Network& net,
                                        const Eigen::ArrayXd& omegas, double epsilon,
                                        const PinningSchedule& schedule, double t);

// Frequency perturbation an additive input (lambda, lambda) induces on the
// phase, via the PSF projection:
//   sqrt(2/alpha) * lambda * cos(theta + pi/4)  ==  Z(theta) . (lambda, lambda)
double psf_projected_pin_term(double theta, double lambda, double alpha);

// Equivalent parametric frequency for one pinned node: omega plus the time
// average of psf_projected_pin_term along the node's sampled phase path over
// [0, t_p], integrated with the trapezoid rule. The samples must be uniformly
// spaced (within 1e-9 relative) and cover [0, t_p].
double equivalent_parametric_frequency(const std::vector<double>& times,
                                       const std::vector<double>& thetas, double lambda, double alpha,
                                       double omega, double t_p);

} // namespace pinsync

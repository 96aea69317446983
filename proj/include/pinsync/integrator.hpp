#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "pinsync/errors.hpp"
#include "pinsync/phase.hpp"

namespace pinsync {

// Fixed-step integration window. The horizon must be an exact multiple of dt
// (within 1e-9) so the step count is unambiguous.
struct IntegratorConfig {
    double dt = 0.01;
    double horizon = 50.0;
    long record_every = 1; // steps between recorded samples

    void validate() const {
        if (!(dt > 0.0) || !std::isfinite(dt))
            throw ConfigError("integrator.dt must be positive and finite");
        if (!(horizon >= dt) || !std::isfinite(horizon))
            throw ConfigError("integrator.horizon must be at least one step");
        const double ratio = horizon / dt;
        if (std::abs(ratio - std::round(ratio)) > 1e-9 * std::max(1.0, ratio))
            throw ConfigError("integrator.horizon must be an integer multiple of integrator.dt");
        if (record_every < 1)
            throw ConfigError("integrator.record_every must be at least 1");
        if (std::lround(ratio) % record_every != 0)
            throw ConfigError("integrator.record_every must divide the step count so recorded times "
                              "stay uniformly spaced");
    }

    long steps() const { return std::lround(horizon / dt); }
};

enum class StateKind { full, phase };

struct RunMetadata {
    std::string config_text; // fully resolved config, re-runnable as-is
    std::uint64_t seed = 0;
    std::string run_id; // 16 hex digits, hash of config_text
};

// Recorded run: uniformly spaced sample times and the state at each.
// Full-model samples have layout [x_0..x_{n-1}, y_0..y_{n-1}]; phase samples
// are wrapped into [0, 2*pi).
struct Trajectory {
    StateKind kind = StateKind::full;
    int n = 0;
    std::vector<double> times;
    std::vector<Eigen::VectorXd> samples;
    RunMetadata meta;
};

// One classical 4-stage Runge-Kutta update from t to t + dt. Every stage
// derivative is checked; a non-finite stage aborts with the time and the
// stage index.
template <class Rhs>
Eigen::VectorXd rk4_step(Rhs&& rhs, const Eigen::VectorXd& state, double t, double dt) {
    const auto check = [&](const Eigen::VectorXd& k, int stage) -> const Eigen::VectorXd& {
        if (!k.allFinite())
            throw NumericalError("non-finite derivative at t = " + std::to_string(t) + ", rk4 stage " +
                                 std::to_string(stage));
        return k;
    };
    const Eigen::VectorXd k1 = check(rhs(state, t), 1);
    const Eigen::VectorXd k2 = check(rhs(state + (0.5 * dt) * k1, t + 0.5 * dt), 2);
    const Eigen::VectorXd k3 = check(rhs(state + (0.5 * dt) * k2, t + 0.5 * dt), 3);
    const Eigen::VectorXd k4 = check(rhs(state + dt * k3, t + dt), 4);
    return state + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

namespace detail {
inline void null_observer(const Eigen::VectorXd&, double) {}

inline Eigen::VectorXd wrapped_sample(const Eigen::VectorXd& state, StateKind kind) {
    if (kind == StateKind::full)
        return state;
    Eigen::VectorXd wrapped(state.size());
    for (long i = 0; i < state.size(); ++i)
        wrapped[i] = wrap_phase(state[i]);
    return wrapped;
}
} // namespace detail

// Integrate rhs(state, t) over [0, horizon] from initial_state. Samples are
// recorded every record_every steps, always including t = 0 and t = horizon.
// The observer sees the raw (unwrapped) state at every step; recorded phase
// samples are wrapped into [0, 2*pi).
template <class Rhs, class Observer>
Trajectory integrate(Rhs&& rhs, Eigen::VectorXd initial_state, const IntegratorConfig& config,
                     StateKind kind, Observer&& observe) {
    config.validate();
    const long steps = config.steps();
    const int n = kind == StateKind::full ? static_cast<int>(initial_state.size()) / 2
                                          : static_cast<int>(initial_state.size());

    Trajectory traj;
    traj.kind = kind;
    traj.n = n;
    traj.times.reserve(static_cast<std::size_t>(steps / config.record_every) + 2);

    Eigen::VectorXd state = std::move(initial_state);
    observe(state, 0.0);
    traj.times.push_back(0.0);
    traj.samples.push_back(detail::wrapped_sample(state, kind));

    for (long step = 1; step <= steps; ++step) {
        const double t_prev = static_cast<double>(step - 1) * config.dt;
        state = rk4_step(rhs, state, t_prev, config.dt);
        const double t = static_cast<double>(step) * config.dt;
        observe(state, t);
        if (step % config.record_every == 0 || step == steps) {
            traj.times.push_back(t);
            traj.samples.push_back(detail::wrapped_sample(state, kind));
        }
    }
    return traj;
}

template <class Rhs>
Trajectory integrate(Rhs&& rhs, Eigen::VectorXd initial_state, const IntegratorConfig& config,
                     StateKind kind) {
    return integrate(std::forward<Rhs>(rhs), std::move(initial_state), config, kind,
                     detail::null_observer);
}

} // namespace pinsync

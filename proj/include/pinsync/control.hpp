#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace pinsync {

enum class PinningMode { additive, parametric };

// How the per-node magnitudes were obtained: drawn from the seeded stream,
// given explicitly in the config, or derived from a paired additive run.
enum class MagnitudeSource { drawn, explicit_values, derived };

// One pinning protocol instance: which nodes are driven, for how long, and
// with what per-node magnitude (lambda_i for additive input, omega_p_i for
// the parametric frequency override). Immutable after construction; draws
// happen once, at construction time.
struct PinningSchedule {
    std::vector<int> pinned;     // ordered, distinct node indices
    double t_p = 0.0;            // control window length, [0, t_p] closed
    PinningMode mode = PinningMode::additive;
    Eigen::ArrayXd magnitudes;   // one entry per pinned node
    std::uint64_t seed = 0;      // stream seed the magnitudes were drawn from
    MagnitudeSource source = MagnitudeSource::drawn;

    int n_pinned() const { return static_cast<int>(pinned.size()); }

    // Structural checks: 0 < |pinned| < n, indices distinct and in range,
    // 0 < t_p <= horizon, magnitude count matches. Throws ConfigError.
    void validate(int n, double horizon) const;
};

// The first n_pinned node indices, 0-based.
std::vector<int> default_pinned_set(int n_pinned, int n);

// n_pinned i.i.d. draws from Uniform(lo, hi) on the given stream seed.
// Identical seeds give bit-identical values. The two-argument form draws
// from Uniform(0, scale) and rejects scale <= 0.
Eigen::ArrayXd draw_magnitudes(int n_pinned, double scale, std::uint64_t seed);
Eigen::ArrayXd draw_magnitudes(int n_pinned, double lo, double hi, std::uint64_t seed);

// True iff 0 <= t <= t_p; both window edges are inside the control interval.
inline bool control_window_active(double t, double t_p) {
    return t >= 0.0 && t <= t_p;
}

} // namespace pinsync

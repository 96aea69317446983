#pragma once

#include <cstdint>
#include <random>

#include <Eigen/Dense>

#include "pinsync/errors.hpp"

namespace pinsync {

// All randomness in a run flows from one experiment seed through named
// streams. The generator stack is fixed so that identical seeds give
// bit-identical draws on every platform:
//   - stream seeds derived with splitmix64,
//   - raw bits from std::mt19937_64 (fully specified by the standard),
//   - uniforms mapped explicitly from the top 53 bits (never through
//     std::uniform_real_distribution, whose output is implementation-defined).
inline constexpr const char* kRngAlgorithm = "splitmix64/mt19937_64/u53";

// Stream identifiers, one per independently drawn quantity.
enum class RngStream : std::uint64_t {
    initial_phases = 0,
    magnitudes = 1,
    delta_omega = 2,
    delta_alpha = 3,
};

namespace detail {

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace detail

// Independent sub-seed for one stream of an experiment.
inline std::uint64_t derive_seed(std::uint64_t experiment_seed, RngStream stream) {
    std::uint64_t s = experiment_seed;
    detail::splitmix64_next(s);
    s ^= static_cast<std::uint64_t>(stream) * 0xd1342543de82ef95ULL;
    return detail::splitmix64_next(s);
}

// Deterministic uniform source over one stream.
class UniformSource {
public:
    explicit UniformSource(std::uint64_t seed) : gen_(seed) {}

    // Uniform on the open interval (0, 1): centered 53-bit lattice,
    // so 0 and 1 are never returned.
    double unit() {
        return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1.0p-53;
    }

    // Uniform on (lo, hi).
    double uniform(double lo, double hi) {
        if (!(hi > lo))
            throw ConfigError("uniform draw requires hi > lo");
        return lo + (hi - lo) * unit();
    }

private:
    std::mt19937_64 gen_;
};

inline Eigen::ArrayXd draw_uniform(int count, double lo, double hi, std::uint64_t seed) {
    if (count < 0)
        throw ConfigError("draw_uniform: negative count");
    UniformSource src(seed);
    Eigen::ArrayXd out(count);
    for (int i = 0; i < count; ++i)
        out[i] = src.uniform(lo, hi);
    return out;
}

} // namespace pinsync

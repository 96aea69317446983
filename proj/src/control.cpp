#include "pinsync/control.hpp"

#include <cmath>
#include <set>
#include <string>

#include "pinsync/errors.hpp"
#include "pinsync/rng.hpp"

namespace pinsync {

void PinningSchedule::validate(int n, double horizon) const {
    if (pinned.empty())
        throw ConfigError("pinning schedule: pinned node set is empty");
    if (n_pinned() >= n)
        throw ConfigError("pinning schedule: pinned node count " + std::to_string(n_pinned()) +
                          " must be smaller than the network size " + std::to_string(n));
    std::set<int> distinct;
    for (int idx : pinned) {
        if (idx < 0 || idx >= n)
            throw ConfigError("pinning schedule: node index " + std::to_string(idx) + " out of range [0," +
                              std::to_string(n - 1) + "]");
        if (!distinct.insert(idx).second)
            throw ConfigError("pinning schedule: duplicate node index " + std::to_string(idx));
    }
    if (!(t_p > 0.0))
        throw ConfigError("pinning schedule: t_p must be positive");
    if (t_p > horizon)
        throw ConfigError("pinning schedule: t_p exceeds the simulation horizon");
    if (magnitudes.size() != n_pinned())
        throw ConfigError("pinning schedule: " + std::to_string(magnitudes.size()) + " magnitudes for " +
                          std::to_string(n_pinned()) + " pinned nodes");
    for (int i = 0; i < magnitudes.size(); ++i)
        if (!std::isfinite(magnitudes[i]))
            throw ConfigError("pinning schedule: magnitude " + std::to_string(i) + " is not finite");
}

std::vector<int> default_pinned_set(int n_pinned, int n) {
    if (n_pinned <= 0)
        throw ConfigError("default_pinned_set: pinned node count must be positive");
    if (n_pinned >= n)
        throw ConfigError("default_pinned_set: pinned node count " + std::to_string(n_pinned) +
                          " must be smaller than the network size " + std::to_string(n));
    std::vector<int> nodes(n_pinned);
    for (int i = 0; i < n_pinned; ++i)
        nodes[i] = i;
    return nodes;
}

Eigen::ArrayXd draw_magnitudes(int n_pinned, double scale, std::uint64_t seed) {
    if (!(scale > 0.0))
        throw ConfigError("draw_magnitudes: scale must be positive");
    return draw_magnitudes(n_pinned, 0.0, scale, seed);
}

Eigen::ArrayXd draw_magnitudes(int n_pinned, double lo, double hi, std::uint64_t seed) {
    if (n_pinned <= 0)
        throw ConfigError("draw_magnitudes: pinned node count must be positive");
    if (!(hi > lo))
        throw ConfigError("draw_magnitudes: interval is empty");
    return draw_uniform(n_pinned, lo, hi, seed);
}

} // namespace pinsync

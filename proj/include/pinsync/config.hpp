#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "pinsync/control.hpp"
#include "pinsync/dynamics.hpp"
#include "pinsync/integrator.hpp"
#include "pinsync/network.hpp"

namespace pinsync {

enum class ModelKind { full, phase };
enum class NetworkKind { ring, edgelist };
enum class ScheduleMode { none, additive, parametric };

// One experiment, exactly as configured. Flat "section.key = value" text
// format; parsing is fail-closed (unknown keys are errors) and defaults are
// applied at parse time. Every random quantity is derived from `seed`
// unless given explicitly, so a config describes a run completely.
struct ExperimentConfig {
    ModelKind model = ModelKind::full;
    std::uint64_t seed = 1;

    NetworkKind network_kind = NetworkKind::ring;
    int n = 0; // resolved node count (required for ring; optional minimum for edge lists)
    int k = 0;
    std::string edge_file;

    double alpha = 1.0;
    double omega = 1.0;
    double delta_omega_scale = 0.0; // > 0 draws per-node offsets from U(-s, s)
    double delta_alpha_scale = 0.0;
    std::optional<std::vector<double>> delta_omega; // explicit per-node offsets
    std::optional<std::vector<double>> delta_alpha;
    double heterogeneity_limit = 0.1;

    double epsilon = 0.0; // required key
    std::array<double, 4> d_unit{1.0, -1.0, 1.0, 1.0}; // row-major 2x2

    ScheduleMode mode = ScheduleMode::none;
    int n_pinned = 0;                              // pins nodes 0..n_pinned-1
    std::optional<std::vector<int>> pinned_nodes;  // explicit alternative
    double t_p = 0.0;
    double lambda_min = 0.0;
    std::optional<double> lambda_scale;                // draw interval (lambda_min, lambda_scale)
    std::optional<std::vector<double>> magnitudes;     // explicit alternative
    std::optional<std::uint64_t> schedule_seed;        // defaults to a stream of `seed`

    IntegratorConfig integrator;
    std::optional<std::vector<double>> initial_phases; // explicit alternative to seeded draw
};

// Parse the documented key-value schema. Throws ConfigError naming the
// offending key (with a nearest-key suggestion for unknown keys) and the
// violated constraint. `origin` labels error messages, typically the path.
ExperimentConfig parse_config_text(const std::string& text, const std::string& origin = "<config>");
ExperimentConfig parse_config_file(const std::string& path);

// Apply one "key=value" override through the same setters the parser uses.
void apply_override(ExperimentConfig& config, const std::string& key, const std::string& value,
                    const std::string& origin = "<override>");

// All recognized config keys (for docs and sweep validation).
const std::vector<std::string>& known_config_keys();

// A config with every drawn quantity resolved to explicit values, plus the
// constructed objects a run needs. resolved_text re-parses to a config that
// reproduces this run bit for bit.
struct ResolvedExperiment {
    ExperimentConfig config;
    Network network;
    SLParams params;
    CouplingMatrix coupling;
    std::optional<PinningSchedule> schedule;
    Eigen::ArrayXd initial_phases;
    std::string resolved_text;
    std::string run_id; // 16 hex digits, FNV-1a of resolved_text

    Eigen::VectorXd initial_full_state() const;  // on-cycle: r_i = sqrt(alpha_i)
    Eigen::VectorXd initial_phase_state() const;
};

ResolvedExperiment resolve(const ExperimentConfig& config);

// Canonical echo of a resolved config (fixed key order, 17-digit numbers).
std::string canonical_config_text(const ExperimentConfig& config);

std::uint64_t fnv1a64(const std::string& text);
std::string run_id_of(const std::string& resolved_text);

} // namespace pinsync

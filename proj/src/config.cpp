#include "pinsync/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include "pinsync/errors.hpp"
#include "pinsync/format.hpp"
#include "pinsync/rng.hpp"

namespace pinsync {

namespace {

[[noreturn]] void key_error(const std::string& origin, const std::string& key, const std::string& what) {
    throw ConfigError(origin + ": config key '" + key + "': " + what);
}

double parse_double(const std::string& origin, const std::string& key, const std::string& value) {
    const std::string v = trim(value);
    if (v.empty())
        key_error(origin, key, "expected a number, got an empty value");
    char* end = nullptr;
    const double parsed = std::strtod(v.c_str(), &end);
    if (end != v.c_str() + v.size())
        key_error(origin, key, "expected a number, got '" + v + "'");
    if (std::isnan(parsed))
        key_error(origin, key, "value must not be NaN");
    return parsed;
}

long parse_long(const std::string& origin, const std::string& key, const std::string& value) {
    const std::string v = trim(value);
    char* end = nullptr;
    const long parsed = std::strtol(v.c_str(), &end, 10);
    if (v.empty() || end != v.c_str() + v.size())
        key_error(origin, key, "expected an integer, got '" + v + "'");
    return parsed;
}

std::uint64_t parse_u64(const std::string& origin, const std::string& key, const std::string& value) {
    const std::string v = trim(value);
    if (v.empty() || v[0] == '-')
        key_error(origin, key, "expected an unsigned integer, got '" + v + "'");
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(v.c_str(), &end, 10);
    if (end != v.c_str() + v.size())
        key_error(origin, key, "expected an unsigned integer, got '" + v + "'");
    return parsed;
}

std::vector<double> parse_double_list(const std::string& origin, const std::string& key,
                                      const std::string& value) {
    std::vector<double> out;
    for (const std::string& part : split(value, ','))
        out.push_back(parse_double(origin, key, part));
    return out;
}

std::vector<int> parse_int_list(const std::string& origin, const std::string& key,
                                const std::string& value) {
    std::vector<int> out;
    for (const std::string& part : split(value, ','))
        out.push_back(static_cast<int>(parse_long(origin, key, part)));
    return out;
}

using Setter = std::function<void(ExperimentConfig&, const std::string& value, const std::string& origin,
                                  const std::string& key)>;

const std::map<std::string, Setter>& key_table() {
    static const std::map<std::string, Setter> table = {
        {"model",
         [](ExperimentConfig& c, const std::string& v, const std::string& o, const std::string& k) {
             const std::string m = trim(v);
             if (m == "full")
                 c.model = ModelKind::full;
             else if (m == "phase")
                 c.model = ModelKind::phase;
             else
                 key_error(o, k, "expected 'full' or 'phase', got '" + m + "'");
         }},
        {"seed",
         [](ExperimentConfig& c, const std::string& v, const std::string& o, const std::string& k) {
             c.seed = parse_u64(o, k, v);
         }},
        {"network.kind",
         [](ExperimentConfig& c, const std::string& v, const std::string& o, const std::string& k) {
             const std::string m = trim(v);
             if (m == "ring")
                 c.network_kind = NetworkKind::ring;
             else if (m == "edgelist")
                 c.network_kind = NetworkKind::edgelist;
             else
                 key_error(o, k, "expected 'ring' or 'edgelist', got '" + m + "'");
         }},
        {"network.n",
         [](ExperimentConfig& c, const std::string& v, const std::string& o, const std::string& k) {
             c.n = static_cast<int>(parse_long(o, k, v));
         }},
        {"network.k",
         [](ExperimentConfig& c, const std::string& v, const std::string& o, const std::string& k) {
             c.k = static_cast<int>(parse_long(o, k, v));
         }},
        {"network.file",
         [](ExperimentConfig& c, const std::string& v, const std::string&, const std::string&) {
             c.edge_file = trim(v);
         }},
        {"oscillator.alpha",
         [](ExperimentConfig& c, const std::string& v, const std::string& o, const std::string& k) {
             c.alpha = parse_double(o, k, v);
         }},
        {"oscillator.omega",
         [](ExperimentConfig& c, const std::string& v, const std::string& o, const std::string& k) {
             c.omega = parse_double(o, k, v);
         }},
        {"oscillator.delta_omega_scale",
         [](ExperimentConfig& c, const std::string& v, const std::string& o, const std::string& k) {
             c.delta_omega_scale = parse_double(o, k, v);
         }},
        {"oscillator.delta_alpha_scale",
         [](ExperimentConfig& c, const std::string& v, const std::string& o, const std::string& k) {
             c.delta_alpha_scale = parse_double(o, k, v);
         }},
        {"oscillator.delta_omega",
         [](ExperimentConfig& c, const std::string& v, const std::string& o, const std::string& k) {
             c.delta_omega = parse_double_list(o, k, v);
         }},
        {"oscillator.delta_alpha",
         [](ExperimentConfig& c, const std::string& v, const std::string& o, const std::string& k) {
             c.delta_alpha = parse_double_list(o, k, v);
         }},
        {"oscillator.heterogeneity_limit",
         [](ExperimentConfig& c, const std::string& v, const std::string& o, const std::string& k) {
             c.heterogeneity_limit = parse_double(o, k, v);
         }},
        {"coupling.epsilon",
         [](ExperimentConfig& c, const std::string& v, const std::string& o, const std::string& k) {
             c.epsilon = parse_double(o, k, v);
         }},
        {"coupling.d_unit",
         [](ExperimentConfig& c, const std::string& v, const std::string& o, const std::string& k) {
             const std::vector<double> entries = parse_double_list(o, k, v);
             if (entries.size() != 4)
                 key_error(o, k, "expected 4 comma-separated entries (row-major 2x2), got " +
                                     std::to_string(entries.size()));
             std::copy(entries.begin(), entries.end(), c.d_unit.begin());
         }},
        {"schedule.mode",
         [](ExperimentConfig& c, const std::string& v, const std::string& o, const std::string& k) {
             const std::string m = trim(v);
             if (m == "none")
                 c.mode = ScheduleMode::none;
             else if (m == "additive")
                 c.mode = ScheduleMode::additive;
             else if (m == "parametric")
                 c.mode = ScheduleMode::parametric;
             else
                 key_error(o, k, "expected 'none', 'additive' or 'parametric', got '" + m + "'");
         }},
        {"schedule.n_pinned",
         [](ExperimentConfig& c, const std::string& v, const std::string& o, const std::string& k) {
             c.n_pinned = static_cast<int>(parse_long(o, k, v));
         }},
        {"schedule.nodes",
         [](ExperimentConfig& c, const std::string& v, const std::string& o, const std::string& k) {
             c.pinned_nodes = parse_int_list(o, k, v);
         }},
        {"schedule.t_p",
         [](ExperimentConfig& c, const std::string& v, const std::string& o, const std::string& k) {
             c.t_p = parse_double(o, k, v);
         }},
        {"schedule.lambda_min",
         [](ExperimentConfig& c, const std::string& v, const std::string& o, const std::string& k) {
             c.lambda_min = parse_double(o, k, v);
         }},
        {"schedule.lambda_scale",
         [](ExperimentConfig& c, const std::string& v, const std::string& o, const std::string& k) {
             c.lambda_scale = parse_double(o, k, v);
         }},
        {"schedule.magnitudes",
         [](ExperimentConfig& c, const std::string& v, const std::string& o, const std::string& k) {
             c.magnitudes = parse_double_list(o, k, v);
         }},
        {"schedule.seed",
         [](ExperimentConfig& c, const std::string& v, const std::string& o, const std::string& k) {
             c.schedule_seed = parse_u64(o, k, v);
         }},
        {"integrator.dt",
         [](ExperimentConfig& c, const std::string& v, const std::string& o, const std::string& k) {
             c.integrator.dt = parse_double(o, k, v);
         }},
        {"integrator.horizon",
         [](ExperimentConfig& c, const std::string& v, const std::string& o, const std::string& k) {
             c.integrator.horizon = parse_double(o, k, v);
         }},
        {"integrator.record_every",
         [](ExperimentConfig& c, const std::string& v, const std::string& o, const std::string& k) {
             c.integrator.record_every = parse_long(o, k, v);
         }},
        {"initial.phases",
         [](ExperimentConfig& c, const std::string& v, const std::string& o, const std::string& k) {
             c.initial_phases = parse_double_list(o, k, v);
         }},
    };
    return table;
}

std::size_t levenshtein(const std::string& a, const std::string& b) {
    std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j)
        prev[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        cur[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
        }
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

std::string nearest_key(const std::string& key) {
    std::string best;
    std::size_t best_dist = std::string::npos;
    for (const std::string& candidate : known_config_keys()) {
        std::size_t dist = levenshtein(key, candidate);
        // Also match against the part after the section prefix, so a bare
        // 'epsilonn' points at 'coupling.epsilon'.
        if (const auto dot = candidate.find('.'); dot != std::string::npos)
            dist = std::min(dist, levenshtein(key, candidate.substr(dot + 1)));
        if (dist < best_dist) {
            best_dist = dist;
            best = candidate;
        }
    }
    return best_dist <= 4 ? best : std::string{};
}

// Deterministic, draw-free consistency checks. Runs at parse time and again
// before every run (so overrides cannot sneak past it).
void validate_structure(const ExperimentConfig& c, const std::string& origin) {
    if (c.network_kind == NetworkKind::ring) {
        if (c.n < 3)
            key_error(origin, "network.n", "ring lattice needs at least 3 nodes, got " +
                                               std::to_string(c.n));
        if (c.k < 0 || c.k % 2 != 0)
            key_error(origin, "network.k",
                      "ring lattice coordination number must be even and nonnegative, got " +
                          std::to_string(c.k));
        if (c.k >= c.n)
            key_error(origin, "network.k", "ring lattice coordination number must be smaller than "
                                           "network.n");
    } else {
        if (c.edge_file.empty())
            key_error(origin, "network.file", "required for network.kind = edgelist");
        if (c.n < 0)
            key_error(origin, "network.n", "must be nonnegative");
    }

    if (!(c.alpha > 0.0) || !std::isfinite(c.alpha))
        key_error(origin, "oscillator.alpha", "must be positive (stable limit cycle regime)");
    if (!std::isfinite(c.omega))
        key_error(origin, "oscillator.omega", "must be finite");
    if (!(c.heterogeneity_limit > 0.0))
        key_error(origin, "oscillator.heterogeneity_limit", "must be positive");
    if (c.delta_omega_scale < 0.0 || !std::isfinite(c.delta_omega_scale))
        key_error(origin, "oscillator.delta_omega_scale", "must be finite and nonnegative");
    if (c.delta_alpha_scale < 0.0 || !std::isfinite(c.delta_alpha_scale))
        key_error(origin, "oscillator.delta_alpha_scale", "must be finite and nonnegative");
    if (c.delta_omega && c.delta_omega_scale > 0.0)
        key_error(origin, "oscillator.delta_omega",
                  "conflicts with oscillator.delta_omega_scale; give one or the other");
    if (c.delta_alpha && c.delta_alpha_scale > 0.0)
        key_error(origin, "oscillator.delta_alpha",
                  "conflicts with oscillator.delta_alpha_scale; give one or the other");

    if (c.epsilon < 0.0 || !std::isfinite(c.epsilon))
        key_error(origin, "coupling.epsilon", "must be finite and nonnegative");
    for (double entry : c.d_unit)
        if (!std::isfinite(entry))
            key_error(origin, "coupling.d_unit", "entries must be finite");

    c.integrator.validate();

    if (c.mode == ScheduleMode::none) {
        if (c.t_p != 0.0)
            key_error(origin, "schedule.t_p", "set while schedule.mode is none");
        if (c.n_pinned != 0 || c.pinned_nodes)
            key_error(origin, "schedule.n_pinned", "pinned nodes given while schedule.mode is none");
        if (c.lambda_scale || c.magnitudes || c.lambda_min != 0.0 || c.schedule_seed)
            key_error(origin, "schedule.mode", "control parameters given while schedule.mode is none");
        return;
    }

    if (!(c.t_p > 0.0) || !std::isfinite(c.t_p))
        key_error(origin, "schedule.t_p", "must be positive");
    if (c.t_p > c.integrator.horizon)
        key_error(origin, "schedule.t_p", "must not exceed integrator.horizon");

    if (c.pinned_nodes && c.n_pinned != 0)
        key_error(origin, "schedule.nodes", "conflicts with schedule.n_pinned; give one or the other");
    if (!c.pinned_nodes && c.n_pinned <= 0)
        key_error(origin, "schedule.n_pinned",
                  "a pinned node set is required: give schedule.n_pinned or schedule.nodes");

    if (c.magnitudes && c.lambda_scale)
        key_error(origin, "schedule.magnitudes",
                  "conflicts with schedule.lambda_scale; give one or the other");
    if (!c.magnitudes && !c.lambda_scale)
        key_error(origin, "schedule.lambda_scale",
                  "control magnitudes are required: give schedule.lambda_scale or schedule.magnitudes");
    if (c.lambda_scale) {
        const double scale = *c.lambda_scale;
        if (!std::isfinite(scale) || !std::isfinite(c.lambda_min))
            key_error(origin, "schedule.lambda_scale", "interval bounds must be finite");
        const bool zero_control = scale == 0.0 && c.lambda_min == 0.0;
        if (!zero_control && !(scale > c.lambda_min))
            key_error(origin, "schedule.lambda_scale",
                      "draw interval is empty: schedule.lambda_scale must exceed schedule.lambda_min");
    }
}

Eigen::ArrayXd to_array(const std::vector<double>& v) {
    return Eigen::Map<const Eigen::ArrayXd>(v.data(), static_cast<long>(v.size()));
}

std::vector<double> to_vector(const Eigen::ArrayXd& a) {
    return {a.data(), a.data() + a.size()};
}

} // namespace

const std::vector<std::string>& known_config_keys() {
    static const std::vector<std::string> keys = [] {
        std::vector<std::string> out;
        for (const auto& [key, setter] : key_table())
            out.push_back(key);
        return out;
    }();
    return keys;
}

ExperimentConfig parse_config_text(const std::string& text, const std::string& origin) {
    ExperimentConfig config;
    std::set<std::string> seen;

    std::istringstream in(text);
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        const std::string stripped = trim(line);
        if (stripped.empty())
            continue;
        const std::string where = origin + ":" + std::to_string(lineno);
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ConfigError(where + ": expected 'key = value', got '" + stripped + "'");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        const auto it = key_table().find(key);
        if (it == key_table().end()) {
            std::string msg = where + ": unknown config key '" + key + "'";
            if (const std::string suggestion = nearest_key(key); !suggestion.empty())
                msg += "; did you mean '" + suggestion + "'?";
            throw ConfigError(msg);
        }
        if (!seen.insert(key).second)
            throw ConfigError(where + ": duplicate config key '" + key + "'");
        it->second(config, value, where, key);
    }

    const auto require = [&](const char* key) {
        if (!seen.count(key))
            throw ConfigError(origin + ": missing required config key '" + std::string(key) + "'");
    };
    require("coupling.epsilon");
    require("integrator.dt");
    require("integrator.horizon");
    if (config.network_kind == NetworkKind::ring) {
        require("network.n");
        require("network.k");
    } else {
        require("network.file");
    }

    validate_structure(config, origin);
    return config;
}

ExperimentConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str(), path);
}

void apply_override(ExperimentConfig& config, const std::string& key, const std::string& value,
                    const std::string& origin) {
    const auto it = key_table().find(trim(key));
    if (it == key_table().end()) {
        std::string msg = origin + ": unknown config key '" + trim(key) + "'";
        if (const std::string suggestion = nearest_key(trim(key)); !suggestion.empty())
            msg += "; did you mean '" + suggestion + "'?";
        throw ConfigError(msg);
    }
    it->second(config, value, origin, trim(key));
}

std::string canonical_config_text(const ExperimentConfig& c) {
    std::ostringstream out;
    out << "model = " << (c.model == ModelKind::full ? "full" : "phase") << "\n";
    out << "seed = " << c.seed << "\n";
    out << "network.kind = " << (c.network_kind == NetworkKind::ring ? "ring" : "edgelist") << "\n";
    out << "network.n = " << c.n << "\n";
    if (c.network_kind == NetworkKind::ring)
        out << "network.k = " << c.k << "\n";
    else
        out << "network.file = " << c.edge_file << "\n";
    out << "oscillator.alpha = " << fmt_g17(c.alpha) << "\n";
    out << "oscillator.omega = " << fmt_g17(c.omega) << "\n";
    out << "oscillator.heterogeneity_limit = " << fmt_g17(c.heterogeneity_limit) << "\n";
    if (c.delta_alpha)
        out << "oscillator.delta_alpha = " << join_g17(to_array(*c.delta_alpha)) << "\n";
    if (c.delta_omega)
        out << "oscillator.delta_omega = " << join_g17(to_array(*c.delta_omega)) << "\n";
    out << "coupling.epsilon = " << fmt_g17(c.epsilon) << "\n";
    out << "coupling.d_unit = " << fmt_g17(c.d_unit[0]) << "," << fmt_g17(c.d_unit[1]) << ","
        << fmt_g17(c.d_unit[2]) << "," << fmt_g17(c.d_unit[3]) << "\n";
    switch (c.mode) {
    case ScheduleMode::none:
        out << "schedule.mode = none\n";
        break;
    case ScheduleMode::additive:
    case ScheduleMode::parametric:
        out << "schedule.mode = " << (c.mode == ScheduleMode::additive ? "additive" : "parametric")
            << "\n";
        if (c.pinned_nodes) {
            out << "schedule.nodes = ";
            for (std::size_t i = 0; i < c.pinned_nodes->size(); ++i)
                out << (i ? "," : "") << (*c.pinned_nodes)[i];
            out << "\n";
        }
        out << "schedule.t_p = " << fmt_g17(c.t_p) << "\n";
        if (c.magnitudes)
            out << "schedule.magnitudes = " << join_g17(to_array(*c.magnitudes)) << "\n";
        if (c.schedule_seed)
            out << "schedule.seed = " << *c.schedule_seed << "\n";
        break;
    }
    out << "integrator.dt = " << fmt_g17(c.integrator.dt) << "\n";
    out << "integrator.horizon = " << fmt_g17(c.integrator.horizon) << "\n";
    out << "integrator.record_every = " << c.integrator.record_every << "\n";
    if (c.initial_phases)
        out << "initial.phases = " << join_g17(to_array(*c.initial_phases)) << "\n";
    return out.str();
}

std::uint64_t fnv1a64(const std::string& text) {
    std::uint64_t hash = 1469598103934665603ULL;
    for (unsigned char byte : text) {
        hash ^= byte;
        hash *= 1099511628211ULL;
    }
    return hash;
}

std::string run_id_of(const std::string& resolved_text) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(resolved_text)));
    return buf;
}

Eigen::VectorXd ResolvedExperiment::initial_full_state() const {
    const int n = network.n();
    const Eigen::ArrayXd radius = params.alphas(n).sqrt();
    Eigen::VectorXd state(2 * n);
    state.head(n).array() = radius * initial_phases.cos();
    state.tail(n).array() = radius * initial_phases.sin();
    return state;
}

Eigen::VectorXd ResolvedExperiment::initial_phase_state() const {
    return initial_phases.matrix();
}

ResolvedExperiment resolve(const ExperimentConfig& input) {
    validate_structure(input, "<config>");
    ExperimentConfig cfg = input;

    Network network = cfg.network_kind == NetworkKind::ring
                          ? ring_lattice(cfg.n, cfg.k)
                          : load_edge_list(cfg.edge_file, cfg.n);
    if (cfg.network_kind == NetworkKind::edgelist && cfg.n > 0 && network.n() != cfg.n)
        throw ConfigError("config key 'network.n': edge list file names node " +
                          std::to_string(network.n() - 1) + ", beyond the configured count");
    cfg.n = network.n();
    const int n = cfg.n;

    SLParams params;
    params.alpha = cfg.alpha;
    params.omega = cfg.omega;
    params.heterogeneity_limit = cfg.heterogeneity_limit;
    if (cfg.delta_omega) {
        params.delta_omega = to_array(*cfg.delta_omega);
    } else if (cfg.delta_omega_scale > 0.0) {
        params.delta_omega = draw_uniform(n, -cfg.delta_omega_scale, cfg.delta_omega_scale,
                                          derive_seed(cfg.seed, RngStream::delta_omega));
    }
    if (cfg.delta_alpha) {
        params.delta_alpha = to_array(*cfg.delta_alpha);
    } else if (cfg.delta_alpha_scale > 0.0) {
        params.delta_alpha = draw_uniform(n, -cfg.delta_alpha_scale, cfg.delta_alpha_scale,
                                          derive_seed(cfg.seed, RngStream::delta_alpha));
    }
    params.validate(n);
    if (params.delta_omega.size() > 0) {
        cfg.delta_omega = to_vector(params.delta_omega);
        cfg.delta_omega_scale = 0.0;
    }
    if (params.delta_alpha.size() > 0) {
        cfg.delta_alpha = to_vector(params.delta_alpha);
        cfg.delta_alpha_scale = 0.0;
    }

    CouplingMatrix coupling;
    coupling.epsilon = cfg.epsilon;
    coupling.d_unit << cfg.d_unit[0], cfg.d_unit[1], cfg.d_unit[2], cfg.d_unit[3];

    std::optional<PinningSchedule> schedule;
    if (cfg.mode != ScheduleMode::none) {
        PinningSchedule sched;
        sched.mode = cfg.mode == ScheduleMode::additive ? PinningMode::additive
                                                        : PinningMode::parametric;
        sched.pinned = cfg.pinned_nodes ? *cfg.pinned_nodes : default_pinned_set(cfg.n_pinned, n);
        sched.t_p = cfg.t_p;
        sched.seed = cfg.schedule_seed ? *cfg.schedule_seed
                                       : derive_seed(cfg.seed, RngStream::magnitudes);
        const int n_pinned = sched.n_pinned();
        if (cfg.magnitudes) {
            sched.magnitudes = to_array(*cfg.magnitudes);
            sched.source = MagnitudeSource::explicit_values;
        } else {
            const double scale = *cfg.lambda_scale;
            Eigen::ArrayXd draw = (scale == 0.0 && cfg.lambda_min == 0.0)
                                      ? Eigen::ArrayXd::Zero(n_pinned).eval()
                                      : draw_magnitudes(n_pinned, cfg.lambda_min, scale, sched.seed);
            if (sched.mode == PinningMode::additive) {
                sched.magnitudes = draw;
            } else {
                // Parametric draws perturb each pinned node's own frequency.
                const Eigen::ArrayXd omegas = params.omegas(n);
                sched.magnitudes.resize(n_pinned);
                for (int p = 0; p < n_pinned; ++p)
                    sched.magnitudes[p] = omegas[sched.pinned[p]] + draw[p];
            }
            sched.source = MagnitudeSource::drawn;
        }
        sched.validate(n, cfg.integrator.horizon);
        schedule = sched;
        cfg.pinned_nodes = sched.pinned;
        cfg.n_pinned = 0;
        cfg.magnitudes = to_vector(sched.magnitudes);
        cfg.schedule_seed = sched.seed;
        cfg.lambda_scale.reset();
        cfg.lambda_min = 0.0;
    }

    Eigen::ArrayXd phases;
    if (cfg.initial_phases) {
        if (static_cast<int>(cfg.initial_phases->size()) != n)
            throw ConfigError("config key 'initial.phases': expected " + std::to_string(n) +
                              " entries, got " + std::to_string(cfg.initial_phases->size()));
        phases = to_array(*cfg.initial_phases);
        for (int i = 0; i < n; ++i)
            if (!std::isfinite(phases[i]))
                throw ConfigError("config key 'initial.phases': entry " + std::to_string(i) +
                                  " is not finite");
    } else {
        phases = draw_uniform(n, 0.0, 2.0 * std::numbers::pi,
                              derive_seed(cfg.seed, RngStream::initial_phases));
    }
    cfg.initial_phases = to_vector(phases);

    std::string text = canonical_config_text(cfg);
    std::string id = run_id_of(text);
    return ResolvedExperiment{std::move(cfg),      std::move(network), std::move(params),
                              coupling,            std::move(schedule), std::move(phases),
                              std::move(text),     std::move(id)};
}

} // namespace pinsync

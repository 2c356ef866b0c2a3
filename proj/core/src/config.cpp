#include "vuplink/config.hpp"

#include <yaml-cpp/yaml.h>

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "vuplink/csv.hpp"

namespace vuplink {

std::string_view to_string(SweepVariable v) {
    switch (v) {
        case SweepVariable::D0: return "d0";
        case SweepVariable::InpDensity: return "inp_density";
        case SweepVariable::RsuSpacing: return "rsu_spacing";
        case SweepVariable::VehicleDensity: return "vehicle_density";
    }
    return "unknown";
}

SweepVariable parse_sweep_variable(std::string_view text) {
    for (auto v : {SweepVariable::D0, SweepVariable::InpDensity, SweepVariable::RsuSpacing,
                   SweepVariable::VehicleDensity}) {
        if (to_string(v) == text) return v;
    }
    throw ConfigError("sweep.variable: unknown variable '" + std::string(text) +
                      "' (expected d0, inp_density, rsu_spacing or vehicle_density)");
}

std::vector<double> SweepSpec::values() const {
    std::vector<double> out;
    if (!(step > 0.0) || stop < start) return out;
    const double tol = 1e-9 * step;
    for (std::size_t i = 0;; ++i) {
        const double v = start + static_cast<double>(i) * step;
        if (v > stop + tol) break;
        out.push_back(v);
    }
    return out;
}

void SweepSpec::validate() const {
    if (!std::isfinite(start) || !std::isfinite(stop) || !std::isfinite(step)) {
        throw ConfigError("sweep: start, stop and step must be finite");
    }
    if (!(step > 0.0)) throw ConfigError("sweep.step: must be > 0");
    if (stop < start) throw ConfigError("sweep: stop must be >= start");
}

void apply_sweep_value(Model& model, SweepVariable variable, double value) {
    switch (variable) {
        case SweepVariable::D0: model.scenario.d0_m = value; break;
        case SweepVariable::InpDensity: model.scenario.inp_density_per_m2 = value; break;
        case SweepVariable::RsuSpacing: model.scenario.rsu_spacing_m = value; break;
        case SweepVariable::VehicleDensity: model.scenario.vehicle_density_per_m = value; break;
    }
}

void ExperimentConfig::validate() const {
    try {
        model.validate();
        sweep.validate();
        for (double v : sweep.values()) {
            Model m = model;
            apply_sweep_value(m, sweep.variable, v);
            m.scenario.validate();
        }
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    if (trials < 1) throw ConfigError("run.trials: must be >= 1");
    if (strategies.empty()) throw ConfigError("run.strategies: at least one strategy is required");
    std::set<StrategyId> unique(strategies.begin(), strategies.end());
    if (unique.size() != strategies.size()) throw ConfigError("run.strategies: duplicate strategy");
    if (threads < 1) throw ConfigError("run.threads: must be >= 1");
}

ExperimentConfig default_config() { return ExperimentConfig{}; }

namespace {

// Reads known keys out of one mapping and rejects the rest. Lookups go through
// a const node so yaml-cpp never inserts missing keys.
class Section {
  public:
    Section(const YAML::Node& node, std::string name)
        : node_(node), present_(node.IsDefined() && !node.IsNull()), name_(std::move(name)) {
        if (present_ && !node_.IsMap()) {
            throw ConfigError(name_ + ": expected a mapping");
        }
    }

    template <typename T>
    void read(const char* key, T& out) {
        seen_.insert(key);
        const YAML::Node v = lookup(key);
        if (!v.IsDefined() || v.IsNull()) return;
        try {
            out = v.as<T>();
        } catch (const YAML::Exception&) {
            throw ConfigError(path(key) + ": cannot parse value '" + scalar(v) + "'");
        }
    }

    template <typename Parse>
    void read_enum(const char* key, Parse&& parse) {
        std::string text;
        read(key, text);
        const YAML::Node v = lookup(key);
        if (!v.IsDefined() || v.IsNull()) return;
        try {
            parse(text);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(path(key) + ": " + e.what());
        }
    }

    [[nodiscard]] Section child(const char* key) {
        seen_.insert(key);
        return Section(lookup(key), path(key));
    }

    void finish() const {
        if (!present_) return;
        for (const auto& kv : node_) {
            const auto key = kv.first.as<std::string>();
            if (!seen_.contains(key)) {
                throw ConfigError(path(key.c_str()) + ": unknown key");
            }
        }
    }

  private:
    [[nodiscard]] YAML::Node lookup(const char* key) const {
        if (!present_) return YAML::Node(YAML::NodeType::Undefined);
        const YAML::Node& n = node_;
        return n[key];
    }
    [[nodiscard]] std::string path(const char* key) const {
        return name_.empty() ? std::string(key) : name_ + "." + key;
    }
    static std::string scalar(const YAML::Node& v) {
        return v.IsScalar() ? v.Scalar() : std::string("<non-scalar>");
    }

    const YAML::Node node_;
    const bool present_;
    std::string name_;
    std::set<std::string, std::less<>> seen_;
};

}  // namespace

ExperimentConfig parse_config(std::string_view text) {
    YAML::Node root;
    try {
        root = YAML::Load(std::string(text));
    } catch (const YAML::Exception& e) {
        throw ConfigError(std::string("config is not valid YAML: ") + e.what());
    }
    if (root.IsNull()) root = YAML::Node(YAML::NodeType::Map);

    ExperimentConfig cfg = default_config();
    Section top(root, "");

    {
        auto s = top.child("channel");
        auto& c = cfg.model.channel;
        s.read("tx_power_dbm", c.tx_power_dbm);
        s.read("noise_density_dbm_hz", c.noise_density_dbm_hz);
        s.read("bandwidth_hz", c.bandwidth_hz);
        s.read("shadow_sigma_db", c.shadow_sigma_db);
        s.read("snr_threshold_db", c.snr_threshold_db);
        s.read("slot_time_s", c.slot_time_s);
        auto o = s.child("path_loss_override");
        o.read("intercept_db", c.pl_intercept_db);
        o.read("slope_db_per_decade", c.pl_slope_db_per_decade);
        o.finish();
        s.finish();
    }
    {
        auto s = top.child("scenario");
        auto& r = cfg.model.scenario;
        s.read("d0_m", r.d0_m);
        s.read("vehicle_density_per_m", r.vehicle_density_per_m);
        s.read("rsu_spacing_m", r.rsu_spacing_m);
        s.read("inp_density_per_m2", r.inp_density_per_m2);
        s.read("road_density_m_per_m2", r.road_density_m_per_m2);
        s.read("gamma_shape", r.gamma_shape);
        s.read("gamma_rate_coeff", r.gamma_rate_coeff);
        s.read("wired_scale", r.wired_scale);
        s.read_enum("rsu_count_mode", [&](const std::string& t) { r.rsu_count_mode = parse_rsu_count_mode(t); });
        s.read("wired_time_unit_s", r.wired_time_unit_s);
        s.finish();
    }
    {
        auto s = top.child("link");
        s.read("relay_processing_delay_s", cfg.model.link.relay_processing_delay_s);
        s.read("include_wired_in_utility", cfg.model.link.include_wired_in_utility);
        s.finish();
    }
    {
        auto s = top.child("utility");
        auto& u = cfg.model.utility;
        s.read("latency_req_s", u.latency_req_s);
        s.read("reliability_req", u.reliability_req);
        s.read("weight_latency_centralized", u.weight_latency_centralized);
        s.read("weight_reliability_centralized", u.weight_reliability_centralized);
        s.read("weight_latency_distributed", u.weight_latency_distributed);
        s.read("weight_reliability_distributed", u.weight_reliability_distributed);
        s.read("distance_threshold_m", u.distance_threshold_m);
        s.finish();
    }
    {
        auto s = top.child("strategy");
        auto& st = cfg.model.strategy;
        s.read_enum("acceptance_rule", [&](const std::string& t) { st.acceptance_rule = parse_acceptance_rule(t); });
        s.read("comm_range_m", st.comm_range_m);
        s.read("exhaustive_max_vehicles", st.exhaustive_max_vehicles);
        s.read("exhaustive_require_feasible", st.exhaustive_require_feasible);
        s.finish();
    }
    {
        auto s = top.child("sweep");
        s.read_enum("variable", [&](const std::string& t) { cfg.sweep.variable = parse_sweep_variable(t); });
        s.read("start", cfg.sweep.start);
        s.read("stop", cfg.sweep.stop);
        s.read("step", cfg.sweep.step);
        s.finish();
    }
    {
        auto s = top.child("run");
        s.read("trials", cfg.trials);
        s.read("master_seed", cfg.master_seed);
        std::vector<std::string> names;
        s.read("strategies", names);
        if (!names.empty()) {
            cfg.strategies.clear();
            for (const auto& n : names) {
                try {
                    cfg.strategies.push_back(parse_strategy_id(n));
                } catch (const std::invalid_argument& e) {
                    throw ConfigError(std::string("run.strategies: ") + e.what());
                }
            }
        }
        s.read("output_path", cfg.output_path);
        s.read("threads", cfg.threads);
        s.finish();
    }
    top.finish();

    cfg.validate();
    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open config file '" + path.string() + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) {
        throw IoError("error reading config file '" + path.string() + "'");
    }
    try {
        return parse_config(ss.str());
    } catch (const ConfigError& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

std::string dump_config(const ExperimentConfig& cfg) {
    const auto& c = cfg.model.channel;
    const auto& r = cfg.model.scenario;
    const auto& l = cfg.model.link;
    const auto& u = cfg.model.utility;
    const auto& st = cfg.model.strategy;
    auto num = [](double v) { return format_number(v); };
    auto flag = [](bool b) { return std::string(b ? "true" : "false"); };

    std::ostringstream o;
    o << "# vuplink experiment configuration. Units are part of each key name.\n"
      << "channel:\n"
      << "  tx_power_dbm: " << num(c.tx_power_dbm) << "\n"
      << "  noise_density_dbm_hz: " << num(c.noise_density_dbm_hz) << "\n"
      << "  bandwidth_hz: " << num(c.bandwidth_hz) << "  # assumed mmWave channel width\n"
      << "  shadow_sigma_db: " << num(c.shadow_sigma_db) << "\n"
      << "  snr_threshold_db: " << num(c.snr_threshold_db) << "\n"
      << "  slot_time_s: " << num(c.slot_time_s) << "\n"
      << "  path_loss_override:  # 72 GHz model constants; change only deliberately\n"
      << "    intercept_db: " << num(c.pl_intercept_db) << "\n"
      << "    slope_db_per_decade: " << num(c.pl_slope_db_per_decade) << "\n"
      << "scenario:\n"
      << "  d0_m: " << num(r.d0_m) << "\n"
      << "  vehicle_density_per_m: " << num(r.vehicle_density_per_m) << "  # 0.08 to 0.24\n"
      << "  rsu_spacing_m: " << num(r.rsu_spacing_m) << "\n"
      << "  inp_density_per_m2: " << num(r.inp_density_per_m2) << "  # 1e-7 to 3e-7\n"
      << "  road_density_m_per_m2: " << num(r.road_density_m_per_m2) << "\n"
      << "  gamma_shape: " << num(r.gamma_shape) << "\n"
      << "  gamma_rate_coeff: " << num(r.gamma_rate_coeff) << "\n"
      << "  wired_scale: " << num(r.wired_scale) << "\n"
      << "  rsu_count_mode: " << to_string(r.rsu_count_mode) << "  # mean_area | literal_eq17\n"
      << "  wired_time_unit_s: " << num(r.wired_time_unit_s) << "  # seconds per wired model unit\n"
      << "link:\n"
      << "  relay_processing_delay_s: " << num(l.relay_processing_delay_s) << "\n"
      << "  include_wired_in_utility: " << flag(l.include_wired_in_utility) << "\n"
      << "utility:\n"
      << "  latency_req_s: " << num(u.latency_req_s) << "\n"
      << "  reliability_req: " << num(u.reliability_req) << "\n"
      << "  weight_latency_centralized: " << num(u.weight_latency_centralized) << "\n"
      << "  weight_reliability_centralized: " << num(u.weight_reliability_centralized) << "\n"
      << "  weight_latency_distributed: " << num(u.weight_latency_distributed) << "\n"
      << "  weight_reliability_distributed: " << num(u.weight_reliability_distributed) << "\n"
      << "  distance_threshold_m: " << num(u.distance_threshold_m) << "\n"
      << "strategy:\n"
      << "  acceptance_rule: " << to_string(st.acceptance_rule) << "  # paper_line20 | utility_only\n"
      << "  comm_range_m: " << num(st.comm_range_m) << "\n"
      << "  exhaustive_max_vehicles: " << st.exhaustive_max_vehicles << "\n"
      << "  exhaustive_require_feasible: " << flag(st.exhaustive_require_feasible) << "\n"
      << "sweep:\n"
      << "  variable: " << to_string(cfg.sweep.variable) << "  # d0 | inp_density | rsu_spacing | vehicle_density\n"
      << "  start: " << num(cfg.sweep.start) << "\n"
      << "  stop: " << num(cfg.sweep.stop) << "\n"
      << "  step: " << num(cfg.sweep.step) << "\n"
      << "run:\n"
      << "  trials: " << cfg.trials << "\n"
      << "  master_seed: " << cfg.master_seed << "\n"
      << "  strategies: [";
    for (std::size_t i = 0; i < cfg.strategies.size(); ++i) {
        o << (i ? ", " : "") << to_string(cfg.strategies[i]);
    }
    o << "]\n"
      << "  output_path: \"" << cfg.output_path << "\"\n"
      << "  threads: " << cfg.threads << "\n";
    return o.str();
}

}  // namespace vuplink

#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vuplink/strategy.hpp"

namespace vuplink {

/// Invalid or unreadable-as-config input. Maps to exit code 2.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Filesystem failure with the offending path in the message. Maps to exit code 3.
class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class SweepVariable { D0, InpDensity, RsuSpacing, VehicleDensity };

[[nodiscard]] std::string_view to_string(SweepVariable v);
[[nodiscard]] SweepVariable parse_sweep_variable(std::string_view text);

struct SweepSpec {
    SweepVariable variable = SweepVariable::D0;
    double start = 5.0;
    double stop = 100.0;
    double step = 2.5;

    /// start, start + step, ... up to stop inclusive (within a relative step tolerance).
    [[nodiscard]] std::vector<double> values() const;
    void validate() const;
};

/// Writes the sweep value into the matching model field.
void apply_sweep_value(Model& model, SweepVariable variable, double value);

struct ExperimentConfig {
    Model model;
    SweepSpec sweep;
    std::size_t trials = 1000;
    std::uint64_t master_seed = 1;
    std::vector<StrategyId> strategies{StrategyId::Pareto, StrategyId::Cellular, StrategyId::RandomRelay};
    std::string output_path = "results.csv";
    unsigned threads = 1;

    /// Throws ConfigError describing the first violated invariant.
    void validate() const;
};

[[nodiscard]] ExperimentConfig default_config();

/// Parses the YAML document. Missing keys keep their defaults; unknown keys are
/// rejected. Throws ConfigError.
[[nodiscard]] ExperimentConfig parse_config(std::string_view text);

/// Reads and parses a config file. Throws IoError if unreadable, ConfigError if invalid.
[[nodiscard]] ExperimentConfig load_config(const std::filesystem::path& path);

/// Canonical YAML rendering; parse_config(dump_config(c)) reproduces c.
[[nodiscard]] std::string dump_config(const ExperimentConfig& cfg);

}  // namespace vuplink

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vuplink/config.hpp"

namespace vuplink {

/// One CSV row. Aggregate rows carry trial_index == kAggregateTrialIndex and a
/// strategy_id suffixed with ":mean" or ":std".
struct TrialRecord {
    double sweep_value = 0.0;
    std::int64_t trial_index = 0;
    std::string strategy_id;
    double n_hops = 0.0;
    double wireless_latency = 0.0;  // seconds
    double wired_latency = 0.0;     // model time units
    double total_latency = 0.0;     // seconds
    double success_prob = 0.0;
    double utility = 0.0;
    double feasible = 0.0;  // 0/1 per trial, fraction on aggregate rows
};

inline constexpr std::int64_t kAggregateTrialIndex = -1;

/// Rows in output order: for each sweep point, its trials ordered by
/// (trial index, configured strategy order), then that point's ":mean" and ":std"
/// rows per strategy.
struct SweepResult {
    std::vector<double> sweep_values;
    std::vector<TrialRecord> rows;

    /// Raw (non-aggregate) rows only.
    [[nodiscard]] std::size_t trial_row_count() const;
};

/// Monte Carlo sweep over d0 (or vehicle density). Output is identical for any
/// worker count. Throws ConfigError if the config is invalid or the sweep
/// variable is not d0 / vehicle_density.
[[nodiscard]] SweepResult run_distance_sweep(const ExperimentConfig& cfg);

/// Closed-form wired latency across an inp_density or rsu_spacing sweep, one
/// row per point with strategy_id "wired".
[[nodiscard]] SweepResult run_wired_sweep(const ExperimentConfig& cfg);

/// Mean and sample standard deviation (n - 1 denominator; 0 for n == 1).
struct MeanStd {
    double mean = 0.0;
    double std = 0.0;
};
[[nodiscard]] MeanStd mean_std(std::span<const double> xs);

struct ComparisonRow {
    double sweep_value = 0.0;
    Structure structure = Structure::Centralized;  // classification of the sweep distance
    std::map<StrategyId, MeanStd> utility;
    /// (mean pareto - mean baseline) / mean baseline, per non-pareto strategy.
    std::map<StrategyId, double> improvement;
    /// Per-trial paired difference Omega(pareto) - Omega(baseline).
    std::map<StrategyId, MeanStd> paired_difference;
    std::size_t trials = 0;

    /// Paired difference mean exceeds 3 standard errors.
    [[nodiscard]] bool significant_gain(StrategyId baseline) const;
};

struct ComparisonSummary {
    std::vector<StrategyId> strategies;
    std::vector<ComparisonRow> rows;
    /// Largest improvement of pareto over each baseline across the sweep, and where.
    std::map<StrategyId, std::pair<double, double>> max_improvement;
};

/// Runs the distance sweep and tabulates per-point mean utility. Requires at
/// least two strategies including pareto.
[[nodiscard]] ComparisonSummary compare_strategies(const ExperimentConfig& cfg);
[[nodiscard]] ComparisonSummary summarize(const ExperimentConfig& cfg, const SweepResult& result);

/// Per sweep point mean of one column for one strategy, from the raw rows.
[[nodiscard]] std::vector<double> mean_column(const SweepResult& result, StrategyId id,
                                              double TrialRecord::*column);

/// First sweep value from which series `challenger` stays strictly above
/// `incumbent` through the end of the sweep, after being at or below it at some
/// earlier point. Linearly interpolated between the bracketing points.
[[nodiscard]] std::optional<double> find_crossover(std::span<const double> x,
                                                   std::span<const double> incumbent,
                                                   std::span<const double> challenger);

/// Summary table as CSV.
[[nodiscard]] std::string comparison_csv(const ComparisonSummary& summary);

}  // namespace vuplink

#include "vuplink/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "vuplink/csv.hpp"
#include "vuplink/rng.hpp"

namespace vuplink {

std::size_t SweepResult::trial_row_count() const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const TrialRecord& r) {
        return r.trial_index != kAggregateTrialIndex;
    }));
}

namespace {

// Neumaier-compensated sum; a constant column averages back to itself.
double compensated_sum(std::span<const double> xs) {
    double sum = 0.0;
    double comp = 0.0;
    for (double x : xs) {
        const double t = sum + x;
        comp += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
        sum = t;
    }
    return sum + comp;
}

}  // namespace

MeanStd mean_std(std::span<const double> xs) {
    MeanStd out;
    if (xs.empty()) return out;
    const double n = static_cast<double>(xs.size());
    out.mean = compensated_sum(xs) / n;
    if (xs.size() > 1) {
        double ss = 0.0;
        for (double x : xs) ss += (x - out.mean) * (x - out.mean);
        out.std = std::sqrt(ss / (n - 1.0));
    }
    return out;
}

namespace {

TrialRecord to_record(double sweep_value, std::size_t trial, const StrategyOutcome& o) {
    TrialRecord r;
    r.sweep_value = sweep_value;
    r.trial_index = static_cast<std::int64_t>(trial);
    r.strategy_id = std::string(to_string(o.strategy_id));
    r.n_hops = static_cast<double>(o.chosen.hop_count());
    r.wireless_latency = o.metrics.wireless_latency_s;
    r.wired_latency = o.metrics.wired_latency;
    r.total_latency = o.metrics.total_latency_s;
    r.success_prob = o.metrics.success_prob;
    r.utility = o.metrics.utility;
    r.feasible = o.feasible ? 1.0 : 0.0;
    return r;
}

// Columns averaged into aggregate rows.
constexpr double TrialRecord::*kNumericColumns[] = {
    &TrialRecord::n_hops,       &TrialRecord::wireless_latency, &TrialRecord::wired_latency,
    &TrialRecord::total_latency, &TrialRecord::success_prob,    &TrialRecord::utility,
    &TrialRecord::feasible,
};

void append_aggregates(std::vector<TrialRecord>& out, std::span<const TrialRecord> point_rows,
                       double sweep_value, const std::vector<StrategyId>& strategies) {
    const std::size_t ns = strategies.size();
    for (std::size_t si = 0; si < ns; ++si) {
        TrialRecord mean_row;
        TrialRecord std_row;
        const std::string id(to_string(strategies[si]));
        mean_row.sweep_value = std_row.sweep_value = sweep_value;
        mean_row.trial_index = std_row.trial_index = kAggregateTrialIndex;
        mean_row.strategy_id = id + ":mean";
        std_row.strategy_id = id + ":std";
        std::vector<double> column;
        column.reserve(point_rows.size() / ns);
        for (auto member : kNumericColumns) {
            column.clear();
            for (std::size_t i = si; i < point_rows.size(); i += ns) {
                column.push_back(point_rows[i].*member);
            }
            const auto ms = mean_std(column);
            mean_row.*member = ms.mean;
            std_row.*member = ms.std;
        }
        out.push_back(std::move(mean_row));
        out.push_back(std::move(std_row));
    }
}

// Runs fn(job) for job in [0, jobs) on `threads` workers; rethrows the first failure.
template <typename Fn>
void parallel_for(std::size_t jobs, unsigned threads, Fn&& fn) {
    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(jobs, 1))));
    if (workers == 1) {
        for (std::size_t j = 0; j < jobs; ++j) fn(j);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto work = [&] {
        for (;;) {
            const std::size_t j = next.fetch_add(1);
            if (j >= jobs) return;
            try {
                fn(j);
            } catch (...) {
                std::lock_guard lock(failure_mu);
                if (!failure) failure = std::current_exception();
                next.store(jobs);
                return;
            }
        }
    };
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    pool.clear();  // join
    if (failure) std::rethrow_exception(failure);
}

constexpr std::uint64_t kVehicleStream = 0;

}  // namespace

SweepResult run_distance_sweep(const ExperimentConfig& cfg) {
    cfg.validate();
    if (cfg.sweep.variable != SweepVariable::D0 && cfg.sweep.variable != SweepVariable::VehicleDensity) {
        throw ConfigError("sweep-distance needs sweep.variable d0 or vehicle_density, got " +
                          std::string(to_string(cfg.sweep.variable)));
    }
    SweepResult result;
    result.sweep_values = cfg.sweep.values();
    const std::size_t np = result.sweep_values.size();
    const std::size_t nt = cfg.trials;
    const std::size_t ns = cfg.strategies.size();

    std::vector<Model> models(np, cfg.model);
    for (std::size_t i = 0; i < np; ++i) {
        apply_sweep_value(models[i], cfg.sweep.variable, result.sweep_values[i]);
    }

    std::vector<TrialRecord> raw(np * nt * ns);
    parallel_for(np * nt, cfg.threads, [&](std::size_t job) {
        const std::size_t point = job / nt;
        const std::size_t trial = job % nt;
        const Model& model = models[point];
        const double d0 = model.scenario.d0_m;
        auto rng = make_stream(cfg.master_seed, {point, trial, kVehicleStream});
        const VehiclePositions vehicles = sample_vehicles(model.scenario, rng);
        for (std::size_t si = 0; si < ns; ++si) {
            const StrategyId id = cfg.strategies[si];
            auto strategy_rng = make_stream(cfg.master_seed, {point, trial, 1 + static_cast<std::uint64_t>(id)});
            const auto outcome = run_strategy(id, vehicles, d0, model, strategy_rng);
            raw[job * ns + si] = to_record(result.sweep_values[point], trial, outcome);
        }
    });

    result.rows.reserve(raw.size() + np * ns * 2);
    for (std::size_t p = 0; p < np; ++p) {
        std::span<const TrialRecord> point_rows(raw.data() + p * nt * ns, nt * ns);
        result.rows.insert(result.rows.end(), point_rows.begin(), point_rows.end());
        append_aggregates(result.rows, point_rows, result.sweep_values[p], cfg.strategies);
    }
    return result;
}

SweepResult run_wired_sweep(const ExperimentConfig& cfg) {
    cfg.validate();
    if (cfg.sweep.variable != SweepVariable::InpDensity && cfg.sweep.variable != SweepVariable::RsuSpacing) {
        throw ConfigError("sweep-wired needs sweep.variable inp_density or rsu_spacing, got " +
                          std::string(to_string(cfg.sweep.variable)));
    }
    SweepResult result;
    result.sweep_values = cfg.sweep.values();
    for (double v : result.sweep_values) {
        Model m = cfg.model;
        apply_sweep_value(m, cfg.sweep.variable, v);
        TrialRecord r;
        r.sweep_value = v;
        r.trial_index = 0;
        r.strategy_id = "wired";
        r.wired_latency = wired_latency(m.scenario);
        r.total_latency = wired_latency_seconds(m.scenario);
        r.success_prob = 1.0;
        result.rows.push_back(std::move(r));
    }
    return result;
}

std::vector<double> mean_column(const SweepResult& result, StrategyId id, double TrialRecord::*column) {
    const std::string name(to_string(id));
    std::vector<double> sums(result.sweep_values.size(), 0.0);
    std::vector<std::size_t> counts(result.sweep_values.size(), 0);
    std::size_t point = 0;
    for (const auto& r : result.rows) {
        while (point < result.sweep_values.size() && r.sweep_value != result.sweep_values[point]) ++point;
        if (point == result.sweep_values.size()) break;
        if (r.trial_index == kAggregateTrialIndex || r.strategy_id != name) continue;
        sums[point] += r.*column;
        ++counts[point];
    }
    for (std::size_t i = 0; i < sums.size(); ++i) {
        sums[i] = counts[i] ? sums[i] / static_cast<double>(counts[i]) : std::nan("");
    }
    return sums;
}

bool ComparisonRow::significant_gain(StrategyId baseline) const {
    auto it = paired_difference.find(baseline);
    if (it == paired_difference.end() || trials == 0) return false;
    const double se = it->second.std / std::sqrt(static_cast<double>(trials));
    return it->second.mean > 3.0 * se && it->second.mean > 0.0;
}

ComparisonSummary summarize(const ExperimentConfig& cfg, const SweepResult& result) {
    ComparisonSummary s;
    s.strategies = cfg.strategies;
    const std::size_t ns = cfg.strategies.size();
    const std::size_t nt = cfg.trials;
    const auto pareto_pos = std::find(cfg.strategies.begin(), cfg.strategies.end(), StrategyId::Pareto);
    const bool has_pareto = pareto_pos != cfg.strategies.end();
    const std::size_t pi = static_cast<std::size_t>(pareto_pos - cfg.strategies.begin());

    std::size_t cursor = 0;
    for (double value : result.sweep_values) {
        ComparisonRow row;
        row.sweep_value = value;
        row.trials = nt;
        Model m = cfg.model;
        apply_sweep_value(m, cfg.sweep.variable, value);
        row.structure = classify_structure(m.scenario.d0_m, m.utility);

        std::vector<std::vector<double>> util(ns);
        for (std::size_t t = 0; t < nt; ++t) {
            for (std::size_t si = 0; si < ns; ++si) {
                util[si].push_back(result.rows[cursor++].utility);
            }
        }
        cursor += 2 * ns;  // aggregate rows
        for (std::size_t si = 0; si < ns; ++si) {
            row.utility[cfg.strategies[si]] = mean_std(util[si]);
        }
        if (has_pareto) {
            const double pareto_mean = row.utility[StrategyId::Pareto].mean;
            for (std::size_t si = 0; si < ns; ++si) {
                if (si == pi) continue;
                const StrategyId b = cfg.strategies[si];
                row.improvement[b] = (pareto_mean - row.utility[b].mean) / row.utility[b].mean;
                std::vector<double> diff(nt);
                for (std::size_t t = 0; t < nt; ++t) diff[t] = util[pi][t] - util[si][t];
                row.paired_difference[b] = mean_std(diff);
                auto [it, inserted] = s.max_improvement.try_emplace(b, row.improvement[b], value);
                if (!inserted && row.improvement[b] > it->second.first) {
                    it->second = {row.improvement[b], value};
                }
            }
        }
        s.rows.push_back(std::move(row));
    }
    return s;
}

ComparisonSummary compare_strategies(const ExperimentConfig& cfg) {
    if (cfg.strategies.size() < 2) {
        throw ConfigError("compare needs at least two strategies");
    }
    if (std::find(cfg.strategies.begin(), cfg.strategies.end(), StrategyId::Pareto) == cfg.strategies.end()) {
        throw ConfigError("compare needs the pareto strategy among run.strategies");
    }
    return summarize(cfg, run_distance_sweep(cfg));
}

std::optional<double> find_crossover(std::span<const double> x, std::span<const double> incumbent,
                                     std::span<const double> challenger) {
    const std::size_t n = std::min({x.size(), incumbent.size(), challenger.size()});
    if (n == 0) return std::nullopt;
    // Last index where the challenger is not strictly ahead.
    std::optional<std::size_t> last_behind;
    for (std::size_t i = 0; i < n; ++i) {
        if (!(challenger[i] > incumbent[i])) last_behind = i;
    }
    if (!last_behind || *last_behind + 1 >= n) return std::nullopt;
    const std::size_t i = *last_behind;
    const double g0 = challenger[i] - incumbent[i];          // <= 0
    const double g1 = challenger[i + 1] - incumbent[i + 1];  // > 0
    const double frac = g1 == g0 ? 0.0 : -g0 / (g1 - g0);
    return x[i] + frac * (x[i + 1] - x[i]);
}

std::string comparison_csv(const ComparisonSummary& s) {
    std::ostringstream o;
    o << "sweep_value,structure";
    for (auto id : s.strategies) o << ",mean_utility_" << to_string(id) << ",std_utility_" << to_string(id);
    std::vector<StrategyId> baselines;
    for (auto id : s.strategies) {
        if (id != StrategyId::Pareto) baselines.push_back(id);
    }
    const bool has_pareto = baselines.size() != s.strategies.size();
    if (has_pareto) {
        for (auto b : baselines) o << ",improvement_over_" << to_string(b);
    }
    o << "\n";
    for (const auto& row : s.rows) {
        o << format_number(row.sweep_value) << "," << to_string(row.structure);
        for (auto id : s.strategies) {
            const auto& ms = row.utility.at(id);
            o << "," << format_number(ms.mean) << "," << format_number(ms.std);
        }
        if (has_pareto) {
            for (auto b : baselines) o << "," << format_number(row.improvement.at(b));
        }
        o << "\n";
    }
    return o.str();
}

}  // namespace vuplink

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "vuplink/csv.hpp"
#include "vuplink/harness.hpp"

using namespace vuplink;

namespace {

int failures = 0;

void report(bool ok, const std::string& name, const std::string& detail) {
    std::printf("%s %s: %s\n", ok ? "PASS" : "FAIL", name.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

class Stopwatch {
  public:
    [[nodiscard]] double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

// ---------------------------------------------------------------------------
// Analytical exactness

void erf_vs_series() {
    Stopwatch sw;
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double x = -6.0 + 12.0 * i / 999.0;
        worst = std::max(worst, std::abs(vuplink::erf(x) - static_cast<double>(oracle::erf_positive_series(x))));
    }
    const double t = sw.seconds();
    report(worst <= 1e-10 && t < 1.0, "analytic.erf_series",
           fmt("max |diff| %.3g over 1000 points in [-6, 6] (limit 1e-10), %.3f s (limit 1 s)", worst, t));
}

void wired_closed_form_vs_quadrature() {
    Stopwatch sw;
    double worst = 0.0;
    for (int i = 0; i <= 20; ++i) {
        const double rho = 1e-7 + 1e-8 * i;
        const double r_max = 12.0 / std::sqrt(std::numbers::pi * rho);
        const double integral = oracle::adaptive_simpson(
            [&](double r) { return 2.0 * rho * std::numbers::pi * r * r * std::exp(-std::numbers::pi * rho * r * r); },
            0.0, r_max, 1e-10);
        RoadScenario s;
        s.inp_density_per_m2 = rho;
        const double quad = s.wired_scale * expected_rsu_count(s) * integral;
        worst = std::max(worst, std::abs(quad / wired_latency(s) - 1.0));
    }
    const double t = sw.seconds();
    report(worst <= 1e-6 && t < 1.0, "analytic.wired_closed_form",
           fmt("max relative error %.3g over 21 densities in [1e-7, 3e-7] (limit 1e-6), %.3f s (limit 1 s)", worst, t));
}

void cell_area_pdf_moments() {
    RoadScenario s;
    const double scale = 1.0 / (s.gamma_rate_coeff * s.inp_density_per_m2);
    const double upper = 80.0 * scale;
    const double mass = oracle::adaptive_simpson([&](double a) { return cell_area_pdf(a, s); }, 0.0, upper, 1e-13);
    const double mean_q =
        oracle::adaptive_simpson([&](double a) { return a * cell_area_pdf(a, s) / scale; }, 0.0, upper, 1e-13);
    const double mean_expected = s.gamma_shape;  // in units of 1 / (b rho_I)
    const double e_mass = std::abs(mass - 1.0);
    const double e_mean = std::abs(mean_q - mean_expected) / mean_expected;
    report(e_mass <= 1e-9 && e_mean <= 1e-9, "analytic.cell_area_pdf",
           fmt("|mass - 1| %.3g, mean relative error %.3g vs a/(b rho_I) = %.10g m^2 (limit 1e-9)", e_mass, e_mean,
               mean_cell_area(s)));
}

void utility_boundary() {
    const UtilityParams up;
    const double w = network_utility(up.latency_req_s, up.reliability_req, Structure::Centralized, up);
    const double e = std::abs(w - std::sqrt(0.5));
    report(e <= 1e-12, "analytic.utility_boundary", fmt("Omega(T_req, P_req) = %.17g, |diff| %.3g (limit 1e-12)", w, e));
}

// ---------------------------------------------------------------------------
// Property suites

void property_suites() {
    Stopwatch sw;
    const ChannelParams ch;
    std::mt19937_64 rng(0x5eed);
    std::size_t bad_hop = 0, bad_wired = 0, bad_split = 0;
    constexpr int kCases = 1000;

    std::uniform_real_distribution<double> logd(std::log(kMinDistance), std::log(2000.0));
    for (int i = 0; i < kCases; ++i) {
        double d1 = std::exp(logd(rng)), d2 = std::exp(logd(rng));
        if (d1 > d2) std::swap(d1, d2);
        d2 = std::max(d2, d1 * 1.001);
        // Below a few metres P_hop rounds to 1.0 in double precision, so strict
        // decrease is only testable once the margin leaves saturation.
        if (hop_success_prob(d1, ch) < 1.0) {
            if (!(hop_success_prob(d1, ch) > hop_success_prob(d2, ch))) ++bad_hop;
            if (!(hop_latency(d1, ch) < hop_latency(d2, ch))) ++bad_hop;
        } else if (!(hop_success_prob(d1, ch) >= hop_success_prob(d2, ch))) {
            ++bad_hop;
        }
    }

    std::uniform_real_distribution<double> rho(1e-7, 3e-7), spacing(20.0, 500.0);
    for (int i = 0; i < kCases; ++i) {
        RoadScenario a, b;
        a.inp_density_per_m2 = rho(rng);
        b.inp_density_per_m2 = a.inp_density_per_m2 * 1.01;
        a.rsu_spacing_m = b.rsu_spacing_m = spacing(rng);
        if (!(wired_latency(a) > wired_latency(b))) ++bad_wired;
        b = a;
        b.rsu_spacing_m = a.rsu_spacing_m * 1.01;
        if (!(wired_latency(a) > wired_latency(b))) ++bad_wired;
    }

    std::uniform_real_distribution<double> dist(20.0, 200.0);
    for (int i = 0; i < kCases; ++i) {
        const double d = i == 0 ? 20.0 : i == 1 ? 200.0 : dist(rng);
        if (!(link_reliability(Uplink{{d / 2, d / 2}}, ch) >= link_reliability(Uplink::direct(d), ch))) ++bad_split;
    }
    const double t = sw.seconds();
    report(bad_hop == 0, "property.hop_monotone",
           fmt("%d distance pairs on [0.1, 2000] m, %zu violations", kCases, bad_hop));
    report(bad_wired == 0, "property.wired_decreasing",
           fmt("%d density and %d spacing pairs, %zu violations", kCases, kCases, bad_wired));
    report(bad_split == 0, "property.split_reliability",
           fmt("%d distances in [20, 200] m, %zu violations", kCases, bad_split));
    report(t < 10.0, "property.runtime", fmt("%.3f s for all suites (limit 10 s)", t));
}

// ---------------------------------------------------------------------------
// Strategy correctness

void strategy_correctness() {
    Stopwatch sw;
    const Model model;
    std::mt19937_64 rng(0xc0ffee);
    std::uniform_real_distribution<double> d0_dist(5.0, 200.0);
    std::uniform_int_distribution<int> nv_dist(0, 12);
    constexpr int kInstances = 1000;
    std::size_t bad_order = 0, bad_steps = 0, steps = 0, multi_hop = 0;
    for (int i = 0; i < kInstances; ++i) {
        const double d0 = d0_dist(rng);
        std::uniform_real_distribution<double> pos(0.0, d0);
        VehiclePositions v;
        for (int n = nv_dist(rng); n > 0; --n) v.positions.push_back(pos(rng));
        std::sort(v.positions.begin(), v.positions.end());
        v.positions.erase(std::unique(v.positions.begin(), v.positions.end()), v.positions.end());
        std::erase_if(v.positions, [](double x) { return x <= 0.0; });

        const auto ex = exhaustive_select(v, d0, model);
        ParetoTrace trace;
        const auto pa = pareto_select(v, d0, model, &trace);
        const auto ce = cellular_select(d0, model);
        if (!(ex.metrics.utility >= pa.metrics.utility) || !(pa.metrics.utility >= ce.metrics.utility)) ++bad_order;
        for (const auto& s : trace.accepted) {
            ++steps;
            const bool ok = s.after.utility >= s.before.utility &&
                            utility_latency(s.after, model.link) <= utility_latency(s.before, model.link) &&
                            s.after.success_prob >= s.before.success_prob;
            if (!ok) ++bad_steps;
        }
        if (pa.chosen.hop_count() > 1) ++multi_hop;
    }
    const double t = sw.seconds();
    report(bad_order == 0, "strategy.ordering",
           fmt("%d instances, N_v <= 12: exhaustive >= pareto >= cellular violated %zu times", kInstances, bad_order));
    report(bad_steps == 0 && steps > 0, "strategy.acceptance_steps",
           fmt("%zu accepted replacements (%zu multi-hop picks), %zu not weakly improving T, P and Omega", steps,
               multi_hop, bad_steps));
    report(t < 60.0, "strategy.runtime", fmt("%.2f s (limit 60 s)", t));
}

// ---------------------------------------------------------------------------
// Qualitative figure reproduction

struct Curves {
    std::vector<double> d0;
    std::vector<double> cellular, distributed, pareto, random_relay;
    ComparisonSummary summary;
};

Curves distance_curves(ExperimentConfig cfg) {
    const auto result = run_distance_sweep(cfg);
    Curves c;
    c.d0 = result.sweep_values;
    auto has = [&](StrategyId id) {
        return std::find(cfg.strategies.begin(), cfg.strategies.end(), id) != cfg.strategies.end();
    };
    if (has(StrategyId::Cellular)) c.cellular = mean_column(result, StrategyId::Cellular, &TrialRecord::utility);
    if (has(StrategyId::Distributed))
        c.distributed = mean_column(result, StrategyId::Distributed, &TrialRecord::utility);
    if (has(StrategyId::Pareto)) {
        c.pareto = mean_column(result, StrategyId::Pareto, &TrialRecord::utility);
        c.summary = summarize(cfg, result);
    }
    if (has(StrategyId::RandomRelay))
        c.random_relay = mean_column(result, StrategyId::RandomRelay, &TrialRecord::utility);
    return c;
}

ExperimentConfig figure_config(double stop) {
    auto cfg = default_config();
    cfg.sweep = {SweepVariable::D0, 5.0, stop, 2.5};
    cfg.trials = 1000;
    cfg.master_seed = 1;
    return cfg;
}

std::string show(std::optional<double> d) { return d ? fmt("%.2f m", *d) : std::string("none"); }

void qualitative() {
    Stopwatch sw;
    // The criteria are judged on [5, 100] m; the sweep runs on to 200 m so a
    // crossover beyond 100 m is still located and reported.
    auto cfg = figure_config(200.0);
    cfg.strategies = {StrategyId::Pareto, StrategyId::Cellular, StrategyId::RandomRelay, StrategyId::Distributed};
    const Curves base = distance_curves(cfg);
    const auto d_star = find_crossover(base.d0, base.cellular, base.distributed);
    const bool in_range = d_star && *d_star > 10.0 && *d_star < 100.0;
    report(in_range, "figure.crossover",
           fmt("distributed overtakes cellular at d* = %s (required inside (10, 100) m)", show(d_star).c_str()));

    // Pareto vs random relay beyond d*, and the largest relative gain anywhere.
    const double from = d_star.value_or(base.d0.back() + 1.0);
    std::size_t behind = 0, beyond = 0;
    double best_gain = -1.0, best_at = 0.0;
    bool best_significant = false;
    for (std::size_t i = 0; i < base.d0.size(); ++i) {
        const auto& row = base.summary.rows[i];
        const double gain = row.improvement.at(StrategyId::RandomRelay);
        if (base.d0[i] <= 100.0 + 1e-9 && gain > best_gain) {
            best_gain = gain;
            best_at = base.d0[i];
            best_significant = row.significant_gain(StrategyId::RandomRelay);
        }
        if (base.d0[i] >= from) {
            ++beyond;
            if (base.pareto[i] < base.random_relay[i]) ++behind;
        }
    }
    report(d_star && behind == 0 && best_gain > 0.05 && best_significant, "figure.pareto_over_random",
           fmt("pareto below random_relay at %zu of %zu points beyond d*; max improvement on [5, 100] m %.2f%% at "
               "%.1f m (limit > 5%%, 3 sigma %s)",
               behind, beyond, 100.0 * best_gain, best_at, best_significant ? "met" : "not met"));

    // Pareto equals cellular inside D_thre.
    std::size_t checked = 0, differ = 0;
    double worst = 0.0;
    for (std::size_t i = 0; i < base.d0.size(); ++i) {
        if (base.d0[i] > cfg.model.utility.distance_threshold_m) continue;
        ++checked;
        const auto& diff = base.summary.rows[i].paired_difference.at(StrategyId::Cellular);
        const double se = diff.std / std::sqrt(static_cast<double>(cfg.trials));
        worst = std::max(worst, std::abs(diff.mean));
        if (std::abs(diff.mean) > 3.0 * se && diff.mean != 0.0) ++differ;
    }
    report(checked > 0 && differ == 0, "figure.pareto_equals_cellular",
           fmt("%zu points with d0 <= 25 m, max |mean paired difference| %.3g, %zu outside 3 SE", checked, worst,
               differ));

    // Tightening either requirement moves the crossover outward.
    auto tight_t = cfg;
    tight_t.strategies = {StrategyId::Cellular, StrategyId::Distributed};
    tight_t.model.utility.latency_req_s = 0.5e-3;
    auto tight_p = tight_t;
    tight_p.model.utility.latency_req_s = cfg.model.utility.latency_req_s;
    tight_p.model.utility.reliability_req = 0.99;
    const Curves ct = distance_curves(tight_t);
    const Curves cp = distance_curves(tight_p);
    const auto d_t = find_crossover(ct.d0, ct.cellular, ct.distributed);
    const auto d_p = find_crossover(cp.d0, cp.cellular, cp.distributed);
    const bool shifted = d_star && d_t && d_p && *d_t > *d_star && *d_p > *d_star;
    report(shifted, "figure.threshold_shift",
           fmt("d* %s; T_req 0.5 ms -> %s; P_req 0.99 -> %s", show(d_star).c_str(), show(d_t).c_str(),
               show(d_p).c_str()));

    const double t = sw.seconds();
    report(t < 300.0, "figure.runtime", fmt("%.1f s for three 1000-trial sweeps over [5, 200] m (limit 300 s)", t));
}

// ---------------------------------------------------------------------------
// Reproducibility

std::string csv_of(const ExperimentConfig& cfg) {
    std::ostringstream o;
    write_trial_csv(o, run_distance_sweep(cfg).rows);
    return o.str();
}

void reproducibility() {
    auto cfg = default_config();
    cfg.trials = 100;
    cfg.master_seed = 2024;
    cfg.strategies = {StrategyId::Pareto, StrategyId::Cellular, StrategyId::RandomRelay, StrategyId::Distributed};
    const auto first = csv_of(cfg);
    const auto second = csv_of(cfg);
    cfg.threads = 4;
    const auto threaded = csv_of(cfg);
    report(first == second && first == threaded, "reproducibility.csv",
           fmt("%zu bytes; repeat run %s, 4 threads vs 1 %s", first.size(), first == second ? "identical" : "DIFFERS",
               first == threaded ? "identical" : "DIFFERS"));
}

}  // namespace

int main() {
    try {
        erf_vs_series();
        wired_closed_form_vs_quadrature();
        cell_area_pdf_moments();
        utility_boundary();
        property_suites();
        strategy_correctness();
        qualitative();
        reproducibility();
    } catch (const std::exception& e) {
        report(false, "acceptance.exception", e.what());
    }
    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}

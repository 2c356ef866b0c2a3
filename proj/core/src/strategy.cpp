#include "vuplink/strategy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>

namespace vuplink {

std::string_view to_string(StrategyId id) {
    switch (id) {
        case StrategyId::Pareto: return "pareto";
        case StrategyId::Cellular: return "cellular";
        case StrategyId::RandomRelay: return "random_relay";
        case StrategyId::Exhaustive: return "exhaustive";
        case StrategyId::Distributed: return "distributed";
    }
    return "unknown";
}

StrategyId parse_strategy_id(std::string_view text) {
    for (auto id : {StrategyId::Pareto, StrategyId::Cellular, StrategyId::RandomRelay,
                    StrategyId::Exhaustive, StrategyId::Distributed}) {
        if (to_string(id) == text) return id;
    }
    throw std::invalid_argument("unknown strategy '" + std::string(text) +
                                "' (expected pareto, cellular, random_relay, exhaustive or distributed)");
}

std::string_view to_string(AcceptanceRule rule) {
    return rule == AcceptanceRule::ParetoImprovement ? "paper_line20" : "utility_only";
}

AcceptanceRule parse_acceptance_rule(std::string_view text) {
    if (text == "paper_line20") return AcceptanceRule::ParetoImprovement;
    if (text == "utility_only") return AcceptanceRule::UtilityOnly;
    throw std::invalid_argument("unknown acceptance_rule '" + std::string(text) +
                                "' (expected paper_line20 or utility_only)");
}

void StrategyConfig::validate() const {
    if (!(comm_range_m > 0.0) || !std::isfinite(comm_range_m)) {
        throw std::invalid_argument("strategy.comm_range_m: must be > 0");
    }
    if (exhaustive_max_vehicles > 30) {
        throw std::invalid_argument("strategy.exhaustive_max_vehicles: at most 30");
    }
}

void Model::validate() const {
    channel.validate();
    scenario.validate();
    link.validate();
    utility.validate();
    strategy.validate();
}

double utility_latency(const LinkMetrics& m, const LinkConfig& lc) {
    return lc.include_wired_in_utility ? m.total_latency_s : m.wireless_latency_s;
}

bool meets_requirements(const LinkMetrics& m, const Model& model) {
    return m.success_prob >= model.utility.reliability_req &&
           utility_latency(m, model.link) <= model.utility.latency_req_s;
}

namespace {

bool spans_d0(const Uplink& u, double d0_m) {
    return std::abs(u.length() - d0_m) <= 1e-9 * std::max(1.0, d0_m);
}

StrategyOutcome make_outcome(StrategyId id, Uplink u, const LinkMetrics& m, double d0_m,
                             const Model& model) {
    StrategyOutcome out;
    out.strategy_id = id;
    out.feasible = spans_d0(u, d0_m) && meets_requirements(m, model);
    out.chosen = std::move(u);
    out.metrics = m;
    return out;
}

Uplink chain_uplink(const VehiclePositions& vehicles, const std::vector<std::size_t>& chain, double d0_m) {
    std::vector<double> relays;
    relays.reserve(chain.size());
    for (auto j : chain) relays.push_back(vehicles.positions[j]);
    return Uplink::through(relays, d0_m);
}

bool accepts(const Model& model, const LinkMetrics& cand, const LinkMetrics& inc) {
    if (model.strategy.acceptance_rule == AcceptanceRule::UtilityOnly) {
        return cand.utility > inc.utility;
    }
    return cand.utility >= inc.utility &&
           utility_latency(cand, model.link) <= utility_latency(inc, model.link) &&
           cand.success_prob >= inc.success_prob;
}

}  // namespace

std::size_t nearest_vehicle(const std::vector<double>& positions, double target) {
    auto it = std::lower_bound(positions.begin(), positions.end(), target);
    if (it == positions.begin()) return 0;
    if (it == positions.end()) return positions.size() - 1;
    const auto hi = static_cast<std::size_t>(it - positions.begin());
    const auto lo = hi - 1;
    // Equal distance keeps the smaller position.
    return (target - positions[lo] <= positions[hi] - target) ? lo : hi;
}

std::vector<std::vector<std::size_t>> pareto_relay_chains(const VehiclePositions& vehicles, double d0_m) {
    std::vector<std::vector<std::size_t>> chains;
    std::set<std::vector<std::size_t>> seen;
    const std::size_t nv = vehicles.size();
    for (std::size_t n = 1; n <= nv; ++n) {
        std::vector<std::size_t> chain;
        chain.reserve(n);
        for (std::size_t k = 1; k <= n; ++k) {
            const double target = d0_m * static_cast<double>(k) / static_cast<double>(n + 1);
            const auto j = nearest_vehicle(vehicles.positions, target);
            // Targets increase with k, so snaps are non-decreasing; drop repeats.
            if (chain.empty() || chain.back() != j) chain.push_back(j);
        }
        if (seen.insert(chain).second) {
            chains.push_back(std::move(chain));
        }
    }
    return chains;
}

StrategyOutcome pareto_select(const VehiclePositions& vehicles, double d0_m, const Model& model,
                              ParetoTrace* trace) {
    Uplink best = Uplink::direct(d0_m);
    LinkMetrics best_m = evaluate(best, model.channel, model.link, model.utility, model.scenario);
    if (trace) trace->candidates_evaluated = 1;

    for (const auto& chain : pareto_relay_chains(vehicles, d0_m)) {
        Uplink cand = chain_uplink(vehicles, chain, d0_m);
        if (!cand.valid()) continue;  // a hop shorter than kMinDistance
        const LinkMetrics m = evaluate(cand, model.channel, model.link, model.utility, model.scenario);
        if (trace) ++trace->candidates_evaluated;
        if (accepts(model, m, best_m)) {
            if (trace) trace->accepted.push_back({best_m, m, chain.size()});
            best = std::move(cand);
            best_m = m;
        }
    }
    return make_outcome(StrategyId::Pareto, std::move(best), best_m, d0_m, model);
}

StrategyOutcome cellular_select(double d0_m, const Model& model) {
    Uplink u = Uplink::direct(d0_m);
    const LinkMetrics m = evaluate(u, model.channel, model.link, model.utility, model.scenario);
    return make_outcome(StrategyId::Cellular, std::move(u), m, d0_m, model);
}

StrategyOutcome random_relay_select(const VehiclePositions& vehicles, double d0_m, const Model& model,
                                    RandomStream& rng) {
    const double range = model.strategy.comm_range_m;
    std::vector<double> relays;
    std::vector<double> candidates;
    double here = 0.0;
    while (d0_m - here > range) {
        candidates.clear();
        for (double x : vehicles.positions) {
            if (x - here < kMinDistance) continue;  // behind, or too close to hop to
            if (x - here > range) break;
            if (d0_m - x < kMinDistance) break;
            candidates.push_back(x);
        }
        if (candidates.empty()) break;  // direct hop from here
        std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
        here = candidates[pick(rng)];
        relays.push_back(here);
    }
    Uplink u = Uplink::through(relays, d0_m);
    const LinkMetrics m = evaluate(u, model.channel, model.link, model.utility, model.scenario);
    return make_outcome(StrategyId::RandomRelay, std::move(u), m, d0_m, model);
}

StrategyOutcome exhaustive_select(const VehiclePositions& vehicles, double d0_m, const Model& model) {
    const std::size_t nv = vehicles.size();
    if (nv > model.strategy.exhaustive_max_vehicles) {
        throw std::length_error("exhaustive_select: " + std::to_string(nv) + " vehicles exceeds the limit of " +
                                std::to_string(model.strategy.exhaustive_max_vehicles));
    }
    std::optional<StrategyOutcome> best_any;
    std::optional<StrategyOutcome> best_feasible;
    std::vector<double> relays;
    relays.reserve(nv);
    const std::uint64_t subsets = std::uint64_t{1} << nv;
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        relays.clear();
        for (std::size_t j = 0; j < nv; ++j) {
            if (mask & (std::uint64_t{1} << j)) relays.push_back(vehicles.positions[j]);
        }
        Uplink u = Uplink::through(relays, d0_m);
        if (!u.valid()) continue;
        const LinkMetrics m = evaluate(u, model.channel, model.link, model.utility, model.scenario);
        auto out = make_outcome(StrategyId::Exhaustive, std::move(u), m, d0_m, model);
        if (out.feasible && (!best_feasible || m.utility > best_feasible->metrics.utility)) {
            best_feasible = out;
        }
        if (!best_any || m.utility > best_any->metrics.utility) {
            best_any = std::move(out);
        }
    }
    // mask 0 (direct link) is always valid, so best_any is set.
    if (model.strategy.exhaustive_require_feasible && best_feasible) {
        return *best_feasible;
    }
    return *best_any;
}

StrategyOutcome distributed_select(const VehiclePositions& vehicles, double d0_m, const Model& model) {
    std::optional<Uplink> best;
    LinkMetrics best_m;
    for (const auto& chain : pareto_relay_chains(vehicles, d0_m)) {
        Uplink cand = chain_uplink(vehicles, chain, d0_m);
        if (!cand.valid()) continue;
        const LinkMetrics m = evaluate(cand, model.channel, model.link, model.utility, model.scenario);
        if (!best || m.utility > best_m.utility) {
            best = std::move(cand);
            best_m = m;
        }
    }
    if (!best) {
        // No usable relay: the only uplink left is the direct hop.
        auto out = cellular_select(d0_m, model);
        out.strategy_id = StrategyId::Distributed;
        return out;
    }
    return make_outcome(StrategyId::Distributed, std::move(*best), best_m, d0_m, model);
}

StrategyOutcome run_strategy(StrategyId id, const VehiclePositions& vehicles, double d0_m, const Model& model,
                             RandomStream& rng) {
    switch (id) {
        case StrategyId::Pareto: return pareto_select(vehicles, d0_m, model);
        case StrategyId::Cellular: return cellular_select(d0_m, model);
        case StrategyId::RandomRelay: return random_relay_select(vehicles, d0_m, model, rng);
        case StrategyId::Exhaustive: return exhaustive_select(vehicles, d0_m, model);
        case StrategyId::Distributed: return distributed_select(vehicles, d0_m, model);
    }
    throw std::invalid_argument("run_strategy: unknown strategy id");
}

}  // namespace vuplink

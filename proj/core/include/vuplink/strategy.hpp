#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "vuplink/channel.hpp"
#include "vuplink/links.hpp"
#include "vuplink/rng.hpp"
#include "vuplink/topology.hpp"
#include "vuplink/utility.hpp"

namespace vuplink {

enum class StrategyId {
    Pareto,       // Pareto-improvement uplink search
    Cellular,     // always the direct V2R hop
    RandomRelay,  // greedy random forwarding inside the communication range
    Exhaustive,   // every ordered relay subset; test oracle
    Distributed,  // best multi-hop uplink from the Pareto candidate family
};

[[nodiscard]] std::string_view to_string(StrategyId id);
/// Throws std::invalid_argument for unknown names.
[[nodiscard]] StrategyId parse_strategy_id(std::string_view text);

/// Replacement test applied to each candidate inside pareto_select.
enum class AcceptanceRule {
    /// Omega, T and P must all weakly improve on the incumbent.
    ParetoImprovement,
    /// Omega alone must strictly improve.
    UtilityOnly,
};

[[nodiscard]] std::string_view to_string(AcceptanceRule rule);
/// Accepts "paper_line20" and "utility_only".
[[nodiscard]] AcceptanceRule parse_acceptance_rule(std::string_view text);

struct StrategyConfig {
    AcceptanceRule acceptance_rule = AcceptanceRule::ParetoImprovement;
    double comm_range_m = 50.0;  // random-relay neighbourhood
    std::size_t exhaustive_max_vehicles = 20;
    /// Restrict the exhaustive search to links meeting both requirements.
    bool exhaustive_require_feasible = false;

    void validate() const;
};

/// Everything a strategy needs besides the vehicle snapshot.
struct Model {
    ChannelParams channel;
    RoadScenario scenario;
    LinkConfig link;
    UtilityParams utility;
    StrategyConfig strategy;

    void validate() const;
};

struct StrategyOutcome {
    StrategyId strategy_id = StrategyId::Cellular;
    Uplink chosen;
    LinkMetrics metrics;
    /// Hop lengths sum to d0 and the latency / reliability requirements hold.
    bool feasible = false;
};

/// One accepted replacement inside pareto_select: incumbent before and after.
struct ParetoStep {
    LinkMetrics before;
    LinkMetrics after;
    std::size_t relay_count = 0;
};

struct ParetoTrace {
    std::vector<ParetoStep> accepted;
    std::size_t candidates_evaluated = 0;
};

/// Latency fed to the utility: wireless only, or wireless plus wired.
[[nodiscard]] double utility_latency(const LinkMetrics& m, const LinkConfig& lc);

/// True when the latency used by the utility stays within T_req and the success
/// probability reaches P_req.
[[nodiscard]] bool meets_requirements(const LinkMetrics& m, const Model& model);

/// Index of the vehicle closest to target; ties go to the smaller position.
/// positions must be sorted and non-empty.
[[nodiscard]] std::size_t nearest_vehicle(const std::vector<double>& positions, double target);

/// Relay chains visited by the Pareto search, in visiting order. Chain n (n = 1..N_v)
/// snaps n equally spaced targets to their nearest vehicles; repeated snaps
/// collapse and chains already seen are dropped.
[[nodiscard]] std::vector<std::vector<std::size_t>> pareto_relay_chains(const VehiclePositions& vehicles,
                                                                        double d0_m);

[[nodiscard]] StrategyOutcome pareto_select(const VehiclePositions& vehicles, double d0_m,
                                            const Model& model, ParetoTrace* trace = nullptr);

[[nodiscard]] StrategyOutcome cellular_select(double d0_m, const Model& model);

[[nodiscard]] StrategyOutcome random_relay_select(const VehiclePositions& vehicles, double d0_m,
                                                  const Model& model, RandomStream& rng);

/// Throws std::length_error when N_v exceeds strategy.exhaustive_max_vehicles.
[[nodiscard]] StrategyOutcome exhaustive_select(const VehiclePositions& vehicles, double d0_m,
                                                const Model& model);

[[nodiscard]] StrategyOutcome distributed_select(const VehiclePositions& vehicles, double d0_m,
                                                 const Model& model);

/// Dispatch by id. rng is only drawn from by RandomRelay.
[[nodiscard]] StrategyOutcome run_strategy(StrategyId id, const VehiclePositions& vehicles, double d0_m,
                                           const Model& model, RandomStream& rng);

}  // namespace vuplink

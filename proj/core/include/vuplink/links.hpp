#pragma once

#include <span>
#include <vector>

#include "vuplink/channel.hpp"
#include "vuplink/topology.hpp"
#include "vuplink/utility.hpp"

namespace vuplink {

/// Ordered hop distances from the source vehicle to its RSU. One hop is the
/// centralized (direct V2R) link; more hops go through relay vehicles.
struct Uplink {
    std::vector<double> hop_distances;

    [[nodiscard]] std::size_t hop_count() const noexcept { return hop_distances.size(); }
    [[nodiscard]] double length() const;
    [[nodiscard]] Structure structure() const noexcept {
        return hop_count() <= 1 ? Structure::Centralized : Structure::Distributed;
    }
    /// Non-empty and every hop at least kMinDistance.
    [[nodiscard]] bool valid() const;

    static Uplink direct(double d0_m) { return Uplink{{d0_m}}; }
    /// Hops through the given relay positions (strictly increasing, inside (0, d0)).
    static Uplink through(std::span<const double> relay_positions, double d0_m);

    friend bool operator==(const Uplink&, const Uplink&) = default;
};

struct LinkConfig {
    double relay_processing_delay_s = 100e-6;  // t_proc, per relay vehicle
    bool include_wired_in_utility = false;

    void validate() const;
};

struct LinkMetrics {
    double wireless_latency_s = 0.0;
    double wired_latency = 0.0;  // model time units
    double total_latency_s = 0.0;
    double success_prob = 0.0;
    double utility = 0.0;
};

/// Sum of per-hop latencies plus t_proc for every relay. Throws std::domain_error
/// on an invalid uplink.
[[nodiscard]] double wireless_latency(const Uplink& u, const ChannelParams& cp, const LinkConfig& lc);

/// Product of independent per-hop success probabilities.
[[nodiscard]] double link_reliability(const Uplink& u, const ChannelParams& cp);

/// Wireless latency plus the scenario's wired R2I latency, in seconds.
[[nodiscard]] double total_latency(const Uplink& u, const ChannelParams& cp, const LinkConfig& lc,
                                   const RoadScenario& s);

/// All metrics for one uplink. The utility weight pair follows the uplink's own
/// structure (one hop: centralized, otherwise distributed).
[[nodiscard]] LinkMetrics evaluate(const Uplink& u, const ChannelParams& cp, const LinkConfig& lc,
                                   const UtilityParams& up, const RoadScenario& s);

}  // namespace vuplink

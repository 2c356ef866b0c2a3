#include "vuplink/links.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace vuplink {

double Uplink::length() const {
    return std::accumulate(hop_distances.begin(), hop_distances.end(), 0.0);
}

bool Uplink::valid() const {
    if (hop_distances.empty()) return false;
    for (double d : hop_distances) {
        if (!(d >= kMinDistance) || !std::isfinite(d)) return false;
    }
    return true;
}

Uplink Uplink::through(std::span<const double> relay_positions, double d0_m) {
    Uplink u;
    u.hop_distances.reserve(relay_positions.size() + 1);
    double prev = 0.0;
    for (double x : relay_positions) {
        u.hop_distances.push_back(x - prev);
        prev = x;
    }
    u.hop_distances.push_back(d0_m - prev);
    return u;
}

void LinkConfig::validate() const {
    if (!(relay_processing_delay_s >= 0.0) || !std::isfinite(relay_processing_delay_s)) {
        throw std::invalid_argument("link.relay_processing_delay_s: must be >= 0");
    }
}

namespace {

void require_valid(const Uplink& u) {
    if (!u.valid()) {
        throw std::domain_error("uplink must have at least one hop, each >= " +
                                std::to_string(kMinDistance) + " m");
    }
}

}  // namespace

double wireless_latency(const Uplink& u, const ChannelParams& cp, const LinkConfig& lc) {
    require_valid(u);
    double t = 0.0;
    for (double d : u.hop_distances) {
        t += hop_latency(d, cp);
    }
    return t + static_cast<double>(u.hop_count() - 1) * lc.relay_processing_delay_s;
}

double link_reliability(const Uplink& u, const ChannelParams& cp) {
    require_valid(u);
    double p = 1.0;
    for (double d : u.hop_distances) {
        p *= hop_success_prob(d, cp);
    }
    return p;
}

double total_latency(const Uplink& u, const ChannelParams& cp, const LinkConfig& lc,
                     const RoadScenario& s) {
    return wireless_latency(u, cp, lc) + wired_latency_seconds(s);
}

LinkMetrics evaluate(const Uplink& u, const ChannelParams& cp, const LinkConfig& lc,
                     const UtilityParams& up, const RoadScenario& s) {
    LinkMetrics m;
    m.wireless_latency_s = wireless_latency(u, cp, lc);
    m.wired_latency = wired_latency(s);
    m.total_latency_s = m.wireless_latency_s + m.wired_latency * s.wired_time_unit_s;
    m.success_prob = link_reliability(u, cp);
    const double t = lc.include_wired_in_utility ? m.total_latency_s : m.wireless_latency_s;
    m.utility = network_utility(t, m.success_prob, u.structure(), up);
    return m;
}

}  // namespace vuplink

#pragma once

#include <limits>
#include <string_view>

namespace vuplink {

enum class Structure { Centralized, Distributed };

[[nodiscard]] std::string_view to_string(Structure s);

struct UtilityParams {
    double latency_req_s = 1e-3;  // T_req
    double reliability_req = 0.9; // P_req
    double weight_latency_centralized = 0.5;
    double weight_reliability_centralized = 0.5;
    double weight_latency_distributed = 0.5;
    double weight_reliability_distributed = 0.5;
    double distance_threshold_m = 25.0;  // D_thre

    void validate() const;
};

/// exp((T_req - t) / T_req); >= 1 exactly when t <= T_req.
[[nodiscard]] double latency_utility(double latency_s, const UtilityParams& up);

/// exp((p - P_req) / P_req); >= 1 exactly when p >= P_req.
[[nodiscard]] double reliability_utility(double prob, const UtilityParams& up);

/// Weighted Euclidean norm of the latency and reliability utilities, using the
/// weight pair of the given structure.
[[nodiscard]] double network_utility(double latency_s, double prob, Structure structure,
                                     const UtilityParams& up);

/// Centralized iff the vehicle-to-RSU distance is within the threshold (inclusive).
[[nodiscard]] Structure classify_structure(double distance_m, const UtilityParams& up);

}  // namespace vuplink

#include "vuplink/utility.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "vuplink/channel.hpp"

namespace vuplink {

std::string_view to_string(Structure s) {
    return s == Structure::Centralized ? "centralized" : "distributed";
}

void UtilityParams::validate() const {
    if (!(latency_req_s > 0.0) || !std::isfinite(latency_req_s)) {
        throw std::invalid_argument("utility.latency_req_s: must be > 0");
    }
    if (!(reliability_req > 0.0 && reliability_req <= 1.0)) {
        throw std::invalid_argument("utility.reliability_req: must be in (0, 1]");
    }
    auto weight = [](double w, const char* field) {
        if (!(w >= 0.0) || !std::isfinite(w)) {
            throw std::invalid_argument(std::string("utility.") + field + ": must be >= 0");
        }
    };
    weight(weight_latency_centralized, "weight_latency_centralized");
    weight(weight_reliability_centralized, "weight_reliability_centralized");
    weight(weight_latency_distributed, "weight_latency_distributed");
    weight(weight_reliability_distributed, "weight_reliability_distributed");
    if (weight_latency_centralized == 0.0 && weight_reliability_centralized == 0.0) {
        throw std::invalid_argument("utility: centralized weights are both zero");
    }
    if (weight_latency_distributed == 0.0 && weight_reliability_distributed == 0.0) {
        throw std::invalid_argument("utility: distributed weights are both zero");
    }
    if (!(distance_threshold_m >= kMinDistance)) {
        throw std::invalid_argument("utility.distance_threshold_m: must be >= " +
                                    std::to_string(kMinDistance));
    }
}

double latency_utility(double latency_s, const UtilityParams& up) {
    return std::exp((up.latency_req_s - latency_s) / up.latency_req_s);
}

double reliability_utility(double prob, const UtilityParams& up) {
    return std::exp((prob - up.reliability_req) / up.reliability_req);
}

double network_utility(double latency_s, double prob, Structure structure, const UtilityParams& up) {
    const bool central = structure == Structure::Centralized;
    const double alpha = central ? up.weight_latency_centralized : up.weight_latency_distributed;
    const double beta = central ? up.weight_reliability_centralized : up.weight_reliability_distributed;
    return std::hypot(alpha * latency_utility(latency_s, up), beta * reliability_utility(prob, up));
}

Structure classify_structure(double distance_m, const UtilityParams& up) {
    return distance_m <= up.distance_threshold_m ? Structure::Centralized : Structure::Distributed;
}

}  // namespace vuplink

#include "vuplink/topology.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "vuplink/channel.hpp"

namespace vuplink {

std::string_view to_string(RsuCountMode mode) {
    switch (mode) {
        case RsuCountMode::MeanArea: return "mean_area";
        case RsuCountMode::LiteralIntegral: return "literal_eq17";
    }
    return "unknown";
}

RsuCountMode parse_rsu_count_mode(std::string_view text) {
    if (text == "mean_area") return RsuCountMode::MeanArea;
    if (text == "literal_eq17") return RsuCountMode::LiteralIntegral;
    throw std::invalid_argument("unknown rsu_count_mode '" + std::string(text) +
                                "' (expected mean_area or literal_eq17)");
}

void RoadScenario::validate() const {
    auto positive = [](double v, const char* field) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw std::invalid_argument(std::string("scenario.") + field + ": must be > 0");
        }
    };
    if (!(d0_m >= kMinDistance) || !std::isfinite(d0_m)) {
        throw std::invalid_argument("scenario.d0_m: must be >= " + std::to_string(kMinDistance));
    }
    positive(vehicle_density_per_m, "vehicle_density_per_m");
    positive(rsu_spacing_m, "rsu_spacing_m");
    positive(inp_density_per_m2, "inp_density_per_m2");
    positive(road_density_m_per_m2, "road_density_m_per_m2");
    positive(gamma_shape, "gamma_shape");
    positive(gamma_rate_coeff, "gamma_rate_coeff");
    if (!(wired_scale >= 0.0) || !std::isfinite(wired_scale)) {
        throw std::invalid_argument("scenario.wired_scale: must be >= 0");
    }
    positive(wired_time_unit_s, "wired_time_unit_s");
}

bool VehiclePositions::valid_for(double d0_m) const {
    for (std::size_t i = 0; i < positions.size(); ++i) {
        const double x = positions[i];
        if (!(x > 0.0 && x < d0_m)) return false;
        if (i > 0 && !(positions[i - 1] < x)) return false;
    }
    return true;
}

VehiclePositions sample_vehicles(const RoadScenario& s, RandomStream& rng) {
    std::poisson_distribution<std::size_t> count_dist(s.vehicle_density_per_m * s.d0_m);
    const std::size_t n = count_dist(rng);

    std::uniform_real_distribution<double> place(0.0, s.d0_m);
    VehiclePositions out;
    out.positions.reserve(n);
    while (out.positions.size() < n) {
        const double x = place(rng);
        if (x > 0.0) out.positions.push_back(x);  // open interval
    }
    std::sort(out.positions.begin(), out.positions.end());
    // Exact ties have probability zero but would break strict ordering.
    out.positions.erase(std::unique(out.positions.begin(), out.positions.end()), out.positions.end());
    return out;
}

double cell_area_pdf(double area_m2, const RoadScenario& s) {
    if (!(area_m2 >= 0.0)) {
        throw std::domain_error("cell_area_pdf: area must be >= 0");
    }
    const double rate = s.gamma_rate_coeff * s.inp_density_per_m2;
    if (area_m2 == 0.0) {
        if (s.gamma_shape > 1.0) return 0.0;
        if (s.gamma_shape == 1.0) return rate;
        return std::numeric_limits<double>::infinity();
    }
    // Log domain keeps area^(a-1) in range for large cells.
    const double log_pdf = s.gamma_shape * std::log(rate) - std::lgamma(s.gamma_shape) +
                           (s.gamma_shape - 1.0) * std::log(area_m2) - rate * area_m2;
    return std::exp(log_pdf);
}

double mean_cell_area(const RoadScenario& s) {
    return s.gamma_shape / (s.gamma_rate_coeff * s.inp_density_per_m2);
}

double expected_rsu_count(const RoadScenario& s) {
    switch (s.rsu_count_mode) {
        case RsuCountMode::MeanArea:
            return s.road_density_m_per_m2 * mean_cell_area(s) / s.rsu_spacing_m;
        case RsuCountMode::LiteralIntegral:
            return s.road_density_m_per_m2 / s.rsu_spacing_m;
    }
    return 0.0;
}

double wired_latency(const RoadScenario& s) {
    return 0.5 * s.wired_scale * expected_rsu_count(s) / std::sqrt(s.inp_density_per_m2);
}

double wired_latency_seconds(const RoadScenario& s) {
    return wired_latency(s) * s.wired_time_unit_s;
}

}  // namespace vuplink

#pragma once

#include <string_view>
#include <vector>

#include "vuplink/rng.hpp"

namespace vuplink {

/// How the expected number of RSUs per Inp cell is obtained.
enum class RsuCountMode {
    /// rho_road * E[cell area] / L: expected road length in a cell over the RSU spacing.
    MeanArea,
    /// rho_road / L: the road-length integral taken over the bare area PDF.
    LiteralIntegral,
};

[[nodiscard]] std::string_view to_string(RsuCountMode mode);
/// Accepts "mean_area" and "literal_eq17"; throws std::invalid_argument otherwise.
[[nodiscard]] RsuCountMode parse_rsu_count_mode(std::string_view text);

/// Geometry and densities of one road / RSU / Inp layout.
struct RoadScenario {
    double d0_m = 50.0;                    // source vehicle to RSU
    double vehicle_density_per_m = 0.16;   // rho_v
    double rsu_spacing_m = 100.0;          // L
    double inp_density_per_m2 = 1e-7;      // rho_I
    double road_density_m_per_m2 = 0.004;  // rho_road
    double gamma_shape = 3.61;             // a
    double gamma_rate_coeff = 3.57;        // b
    double wired_scale = 5e-4;             // beta_w
    RsuCountMode rsu_count_mode = RsuCountMode::MeanArea;
    /// Seconds per wired-latency model unit (1 unit displayed as 1 ms).
    double wired_time_unit_s = 1e-3;

    void validate() const;
};

/// Relay vehicle positions measured from the source toward the RSU;
/// strictly increasing, all inside (0, d0).
struct VehiclePositions {
    std::vector<double> positions;

    [[nodiscard]] std::size_t size() const noexcept { return positions.size(); }
    [[nodiscard]] bool empty() const noexcept { return positions.empty(); }

    /// True when the positions are strictly increasing and inside (0, d0).
    [[nodiscard]] bool valid_for(double d0_m) const;
};

/// Homogeneous Poisson snapshot on (0, d0) with intensity rho_v.
[[nodiscard]] VehiclePositions sample_vehicles(const RoadScenario& s, RandomStream& rng);

/// Gamma density of an Inp cell area, shape a and rate b * rho_I.
[[nodiscard]] double cell_area_pdf(double area_m2, const RoadScenario& s);

/// Closed-form mean cell area a / (b rho_I).
[[nodiscard]] double mean_cell_area(const RoadScenario& s);

[[nodiscard]] double expected_rsu_count(const RoadScenario& s);

/// R2I wired latency 1/2 beta_w N_RSU rho_I^(-1/2), in model time units.
[[nodiscard]] double wired_latency(const RoadScenario& s);

/// wired_latency converted to seconds.
[[nodiscard]] double wired_latency_seconds(const RoadScenario& s);

}  // namespace vuplink

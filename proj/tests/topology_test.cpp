#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "vuplink/channel.hpp"
#include "vuplink/topology.hpp"

namespace vuplink {
namespace {

TEST(SampleVehicles, TinyIntensityIsUsuallyEmpty) {
    RoadScenario s;
    s.d0_m = kMinDistance;
    s.vehicle_density_per_m = 1e-6;
    RandomStream rng(1);
    int empty = 0;
    for (int i = 0; i < 1000; ++i) empty += sample_vehicles(s, rng).empty() ? 1 : 0;
    EXPECT_GE(empty, 999);
}

TEST(SampleVehicles, PoissonCountMoments) {
    RoadScenario s;
    s.vehicle_density_per_m = 0.16;
    s.d0_m = 100.0;
    RandomStream rng(99);
    constexpr int kTrials = 10000;
    double sum = 0.0;
    double sum2 = 0.0;
    for (int i = 0; i < kTrials; ++i) {
        const auto n = static_cast<double>(sample_vehicles(s, rng).size());
        sum += n;
        sum2 += n * n;
    }
    const double mean = sum / kTrials;
    const double var = sum2 / kTrials - mean * mean;
    // Mean 16, sd of the sample mean sqrt(16 / 10^4) = 0.04.
    EXPECT_NEAR(mean, 16.0, 3 * 0.04);
    EXPECT_NEAR(var, 16.0, 1.0);
}

TEST(SampleVehicles, PositionsSatisfyInvariants) {
    RoadScenario s;
    for (double d0 : {0.5, 10.0, 60.0, 200.0}) {
        s.d0_m = d0;
        RandomStream rng(static_cast<std::uint64_t>(d0 * 10));
        for (int i = 0; i < 500; ++i) {
            const auto v = sample_vehicles(s, rng);
            EXPECT_TRUE(v.valid_for(d0));
        }
    }
}

TEST(SampleVehicles, SameSeedSamePositions) {
    RoadScenario s;
    auto a = make_stream(42, {3, 7});
    auto b = make_stream(42, {3, 7});
    EXPECT_EQ(sample_vehicles(s, a).positions, sample_vehicles(s, b).positions);
    auto c = make_stream(42, {3, 8});
    auto a2 = make_stream(42, {3, 7});
    EXPECT_NE(sample_vehicles(s, a2).positions, sample_vehicles(s, c).positions);
}

TEST(VehiclePositions, ValidFor) {
    EXPECT_TRUE((VehiclePositions{{1.0, 2.0, 3.0}}.valid_for(4.0)));
    EXPECT_FALSE((VehiclePositions{{1.0, 1.0}}.valid_for(4.0)));
    EXPECT_FALSE((VehiclePositions{{0.0, 1.0}}.valid_for(4.0)));
    EXPECT_FALSE((VehiclePositions{{1.0, 4.0}}.valid_for(4.0)));
    EXPECT_FALSE((VehiclePositions{{2.0, 1.0}}.valid_for(4.0)));
}

TEST(CellAreaPdf, NormalizedAndMean) {
    RoadScenario s;
    const double scale = 1.0 / (s.gamma_rate_coeff * s.inp_density_per_m2);
    const double upper = 80.0 * scale;  // tail beyond is below e^-70
    const double mass = oracle::adaptive_simpson([&](double a) { return cell_area_pdf(a, s); }, 0.0, upper, 1e-13);
    EXPECT_NEAR(mass, 1.0, 1e-9);
    const double mean =
        oracle::adaptive_simpson([&](double a) { return a * cell_area_pdf(a, s); }, 0.0, upper, 1e-13 * scale);
    EXPECT_NEAR(mean / mean_cell_area(s), 1.0, 1e-9);
    EXPECT_NEAR(mean_cell_area(s), 1.0112044817927171e7, 1e-3);
}

TEST(CellAreaPdf, NegativeAreaIsDomainError) {
    EXPECT_THROW((void)cell_area_pdf(-1.0, RoadScenario{}), std::domain_error);
    EXPECT_EQ(cell_area_pdf(0.0, RoadScenario{}), 0.0);
}

TEST(ExpectedRsuCount, Modes) {
    RoadScenario s;
    EXPECT_NEAR(expected_rsu_count(s), 404.4817927170868, 1e-9);
    s.rsu_count_mode = RsuCountMode::LiteralIntegral;
    EXPECT_NEAR(expected_rsu_count(s), 4e-5, 1e-18);
}

TEST(ExpectedRsuCount, InverseInSpacing) {
    for (auto mode : {RsuCountMode::MeanArea, RsuCountMode::LiteralIntegral}) {
        RoadScenario s;
        s.rsu_count_mode = mode;
        const double base = expected_rsu_count(s);
        s.rsu_spacing_m *= 2.0;
        EXPECT_NEAR(expected_rsu_count(s), base / 2.0, 1e-15 * base);
    }
}

TEST(WiredLatency, ClosedFormMatchesQuadrature) {
    // Integral of 2 rho pi r^2 exp(-pi rho r^2) over r >= 0 is 1 / (2 sqrt(rho)).
    for (double rho : {1e-7, 1.5e-7, 2e-7, 3e-7}) {
        const double r_max = 12.0 / std::sqrt(std::numbers::pi * rho);  // exp(-144) tail
        const double integral = oracle::adaptive_simpson(
            [&](double r) { return 2.0 * rho * std::numbers::pi * r * r * std::exp(-std::numbers::pi * rho * r * r); },
            0.0, r_max, 1e-10);
        RoadScenario s;
        s.inp_density_per_m2 = rho;
        // beta_w * (rho_R / rho_I) * integral with rho_R = rho_I * N_RSU.
        const double via_integral = s.wired_scale * expected_rsu_count(s) * integral;
        EXPECT_NEAR(via_integral / wired_latency(s), 1.0, 1e-6) << rho;
    }
}

TEST(WiredLatency, DefaultValue) {
    RoadScenario s;
    EXPECT_NEAR(wired_latency(s), 319.7709342635252, 1e-9);
    EXPECT_NEAR(wired_latency_seconds(s), 0.3197709342635252, 1e-12);
    s.rsu_count_mode = RsuCountMode::LiteralIntegral;
    EXPECT_NEAR(wired_latency(s), 3.1622776601683794e-5, 1e-17);
}

TEST(WiredLatency, LinearInScaleAndZeroAtZero) {
    RoadScenario s;
    const double base = wired_latency(s);
    s.wired_scale *= 3.0;
    EXPECT_NEAR(wired_latency(s), 3.0 * base, 1e-12);
    s.wired_scale = 0.0;
    EXPECT_EQ(wired_latency(s), 0.0);
}

TEST(WiredLatency, EqualsRsuDensityForm) {
    // 1/2 beta_w rho_R rho_I^(-3/2), rho_R = rho_I N_RSU.
    RoadScenario s;
    s.inp_density_per_m2 = 2.2e-7;
    const double rho_r = s.inp_density_per_m2 * expected_rsu_count(s);
    EXPECT_NEAR(wired_latency(s), 0.5 * s.wired_scale * rho_r * std::pow(s.inp_density_per_m2, -1.5),
                1e-12 * wired_latency(s));
}

TEST(WiredLatency, DecreasingInDensityAndSpacing) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> rho(1e-7, 3e-7);
    std::uniform_real_distribution<double> spacing(50.0, 200.0);
    for (int i = 0; i < 500; ++i) {
        RoadScenario a;
        RoadScenario b;
        double r1 = rho(rng), r2 = rho(rng);
        if (r1 > r2) std::swap(r1, r2);
        if (r1 == r2) continue;
        a.inp_density_per_m2 = r1;
        b.inp_density_per_m2 = r2;
        const double l = spacing(rng);
        a.rsu_spacing_m = b.rsu_spacing_m = l;
        EXPECT_GT(wired_latency(a), wired_latency(b));

        double l1 = spacing(rng), l2 = spacing(rng);
        if (l1 > l2) std::swap(l1, l2);
        if (l1 == l2) continue;
        a.rsu_spacing_m = l1;
        b.rsu_spacing_m = l2;
        b.inp_density_per_m2 = a.inp_density_per_m2;
        EXPECT_GT(wired_latency(a), wired_latency(b));
    }
}

TEST(RoadScenario, Validation) {
    EXPECT_NO_THROW(RoadScenario{}.validate());
    RoadScenario s;
    s.d0_m = 0.01;
    EXPECT_THROW(s.validate(), std::invalid_argument);
    s = {};
    s.inp_density_per_m2 = 0.0;
    EXPECT_THROW(s.validate(), std::invalid_argument);
    s = {};
    s.rsu_spacing_m = -5.0;
    EXPECT_THROW(s.validate(), std::invalid_argument);
    EXPECT_THROW((void)parse_rsu_count_mode("median"), std::invalid_argument);
    EXPECT_EQ(parse_rsu_count_mode("literal_eq17"), RsuCountMode::LiteralIntegral);
}

}  // namespace
}  // namespace vuplink

#include "vuplink/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace vuplink {

namespace {

void require_finite(double x, const char* what) {
    if (!std::isfinite(x)) {
        throw std::domain_error(std::string(what) + ": non-finite argument");
    }
}

void require_distance(double d) {
    require_finite(d, "distance");
    if (d < kMinDistance) {
        throw std::domain_error("distance " + std::to_string(d) + " m is below the " +
                                std::to_string(kMinDistance) + " m minimum");
    }
}

// Alternating Maclaurin series, used for |x| < 2 where its round-off stays
// below 1e-14.
double erf_series(double x) {
    const double x2 = x * x;
    double term = x;
    double sum = x;
    for (int n = 1; n < 200; ++n) {
        term *= -x2 / n;
        const double add = term / (2 * n + 1);
        sum += add;
        if (std::abs(add) < 1e-17 * std::abs(sum)) {
            break;
        }
    }
    return sum * 2.0 / std::sqrt(std::numbers::pi);
}

// Continued fraction for erfc, x >= 2, evaluated with modified Lentz:
// erfc(x) = exp(-x^2)/sqrt(pi) * 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...)))).
double erfc_continued_fraction(double x) {
    constexpr double tiny = 1e-300;
    double f = x;
    double c = x;
    double d = 0.0;
    for (int k = 1; k < 500; ++k) {
        const double a = 0.5 * k;
        d = x + a * d;
        if (std::abs(d) < tiny) d = tiny;
        c = x + a / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = c * d;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-16) {
            break;
        }
    }
    return std::exp(-x * x) / (std::sqrt(std::numbers::pi) * f);
}

constexpr double kSeriesLimit = 2.0;
constexpr double kSaturation = 6.0;

}  // namespace

void ChannelParams::validate() const {
    auto fail = [](const char* field, const char* why) {
        throw std::invalid_argument(std::string("channel.") + field + ": " + why);
    };
    if (!std::isfinite(tx_power_dbm)) fail("tx_power_dbm", "must be finite");
    if (!std::isfinite(noise_density_dbm_hz)) fail("noise_density_dbm_hz", "must be finite");
    if (!(bandwidth_hz > 0.0) || !std::isfinite(bandwidth_hz)) fail("bandwidth_hz", "must be > 0");
    if (!(shadow_sigma_db > 0.0) || !std::isfinite(shadow_sigma_db)) fail("shadow_sigma_db", "must be > 0");
    if (!std::isfinite(snr_threshold_db)) fail("snr_threshold_db", "must be finite");
    if (!std::isfinite(pl_intercept_db)) fail("pl_intercept_db", "must be finite");
    if (!(pl_slope_db_per_decade > 0.0) || !std::isfinite(pl_slope_db_per_decade)) {
        fail("pl_slope_db_per_decade", "must be > 0");
    }
    if (!(slot_time_s > 0.0) || !std::isfinite(slot_time_s)) fail("slot_time_s", "must be > 0");
}

double ChannelParams::noise_power_dbm() const {
    return noise_density_dbm_hz + 10.0 * std::log10(bandwidth_hz);
}

double erf(double x) {
    require_finite(x, "erf");
    const double ax = std::abs(x);
    if (ax < kSeriesLimit) {
        return erf_series(x);
    }
    if (ax >= kSaturation) {
        return x > 0 ? 1.0 : -1.0;
    }
    const double r = 1.0 - erfc_continued_fraction(ax);
    return x > 0 ? r : -r;
}

double erfc(double x) {
    require_finite(x, "erfc");
    if (x < kSeriesLimit) {
        return 1.0 - erf(x);
    }
    if (x > 27.0) {
        return 0.0;  // below the smallest subnormal
    }
    return erfc_continued_fraction(x);
}

double mean_path_loss_db(double distance_m, const ChannelParams& p) {
    require_distance(distance_m);
    return p.pl_intercept_db + p.pl_slope_db_per_decade * std::log10(distance_m);
}

double link_margin_psi(double distance_m, const ChannelParams& p) {
    return p.tx_power_dbm - p.snr_threshold_db - p.noise_power_dbm() -
           mean_path_loss_db(distance_m, p);
}

double hop_success_prob(double distance_m, const ChannelParams& p) {
    const double z = link_margin_psi(distance_m, p) / (std::numbers::sqrt2 * p.shadow_sigma_db);
    // 1/2 (1 + erf(z)) == 1/2 erfc(-z); the erfc route keeps the deep tail accurate.
    const double prob = 0.5 * erfc(-z);
    return std::clamp(prob, kProbabilityFloor, 1.0);
}

double hop_latency(double distance_m, const ChannelParams& p) {
    return p.slot_time_s / hop_success_prob(distance_m, p);
}

double median_range(const ChannelParams& p) {
    const double budget = p.tx_power_dbm - p.snr_threshold_db - p.noise_power_dbm() - p.pl_intercept_db;
    return std::pow(10.0, budget / p.pl_slope_db_per_decade);
}

}  // namespace vuplink

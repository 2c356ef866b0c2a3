#pragma once

// mmWave link budget for a single wireless hop under log-normal shadowing.

namespace vuplink {

/// Shortest hop distance (m) the path-loss model accepts.
inline constexpr double kMinDistance = 0.1;

/// Lower clamp on a hop success probability, keeps t_slot / P finite.
inline constexpr double kProbabilityFloor = 1e-12;

struct ChannelParams {
    double tx_power_dbm = 30.0;
    double noise_density_dbm_hz = -174.0;
    double bandwidth_hz = 1e9;
    double shadow_sigma_db = 5.0;
    double snr_threshold_db = 5.0;
    // 72 GHz close-in model. Only touched through an explicit override.
    double pl_intercept_db = 69.6;
    double pl_slope_db_per_decade = 20.9;
    double slot_time_s = 50e-6;

    /// Throws std::invalid_argument naming the first offending field.
    void validate() const;

    /// Receiver noise power N0 + 10 log10(W) in dBm.
    [[nodiscard]] double noise_power_dbm() const;
};

/// Gaussian error function, |error| <= 1e-10. Throws std::domain_error on NaN/inf.
[[nodiscard]] double erf(double x);

/// Complementary error function, computed without the 1 - erf cancellation.
[[nodiscard]] double erfc(double x);

/// Deterministic part of the path loss, pl_intercept + pl_slope * log10(d).
[[nodiscard]] double mean_path_loss_db(double distance_m, const ChannelParams& p = {});

/// Link margin psi(d): the shadowing headroom left before the SNR drops under threshold.
[[nodiscard]] double link_margin_psi(double distance_m, const ChannelParams& p);

/// P(SNR >= threshold) for one hop, clamped into [kProbabilityFloor, 1].
[[nodiscard]] double hop_success_prob(double distance_m, const ChannelParams& p);

/// Expected single-hop latency slot_time / P_hop.
[[nodiscard]] double hop_latency(double distance_m, const ChannelParams& p);

/// Distance at which psi(d) = 0, i.e. P_hop = 1/2.
[[nodiscard]] double median_range(const ChannelParams& p);

}  // namespace vuplink

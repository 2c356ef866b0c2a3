#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

namespace vuplink {

struct TrialRecord;

inline constexpr std::string_view kTrialCsvHeader =
    "sweep_value,trial_index,strategy_id,n_hops,wireless_latency,wired_latency,total_latency,"
    "success_prob,utility,feasible";

/// Decimal with 12 significant digits, shortest %g form.
[[nodiscard]] std::string format_number(double v);

void write_trial_row(std::ostream& os, const TrialRecord& r);

/// Header plus one LF-terminated line per record.
void write_trial_csv(std::ostream& os, std::span<const TrialRecord> records);

/// Writes to a file (binary mode, LF endings). Throws IoError with the path.
void write_text_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace vuplink

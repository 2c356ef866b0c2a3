#include "vuplink/csv.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

#include "vuplink/config.hpp"
#include "vuplink/harness.hpp"

namespace vuplink {

std::string format_number(double v) {
    if (v == 0.0) return "0";  // no "-0"
    char buf[32];
    const int n = std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::string(buf, static_cast<std::size_t>(n));
}

void write_trial_row(std::ostream& os, const TrialRecord& r) {
    os << format_number(r.sweep_value) << ',' << r.trial_index << ',' << r.strategy_id << ','
       << format_number(r.n_hops) << ',' << format_number(r.wireless_latency) << ','
       << format_number(r.wired_latency) << ',' << format_number(r.total_latency) << ','
       << format_number(r.success_prob) << ',' << format_number(r.utility) << ','
       << format_number(r.feasible) << '\n';
}

void write_trial_csv(std::ostream& os, std::span<const TrialRecord> records) {
    os << kTrialCsvHeader << '\n';
    for (const auto& r : records) write_trial_row(os, r);
}

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) {
        throw IoError("error writing '" + path.string() + "'");
    }
}

}  // namespace vuplink

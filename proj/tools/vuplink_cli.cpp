// vuplink: hybrid vehicular uplink experiments.
//
//   vuplink show-defaults
//   vuplink validate-config --config run.yaml
//   vuplink sweep-distance --config run.yaml --out results.csv --threads 8
//   vuplink sweep-wired --config wired.yaml --out wired.csv
//   vuplink compare --config run.yaml --out summary.csv
//
// Exit codes: 0 success, 2 invalid config or arguments, 3 I/O error.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "vuplink/config.hpp"
#include "vuplink/csv.hpp"
#include "vuplink/harness.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

struct Options {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out;
    std::optional<std::size_t> trials;
    std::optional<unsigned> threads;
    std::vector<std::string> strategies;
    std::string format = "csv";
};

vuplink::ExperimentConfig resolve(const Options& opt) {
    auto cfg = opt.config_path.empty() ? vuplink::default_config() : vuplink::load_config(opt.config_path);
    if (opt.seed) cfg.master_seed = *opt.seed;
    if (opt.trials) cfg.trials = *opt.trials;
    if (opt.threads) cfg.threads = *opt.threads;
    if (opt.out) cfg.output_path = *opt.out;
    if (!opt.strategies.empty()) {
        cfg.strategies.clear();
        for (const auto& s : opt.strategies) {
            try {
                cfg.strategies.push_back(vuplink::parse_strategy_id(s));
            } catch (const std::invalid_argument& e) {
                throw vuplink::ConfigError(std::string("--strategy: ") + e.what());
            }
        }
    }
    if (opt.format != "csv") {
        throw vuplink::ConfigError("--format: only csv is supported");
    }
    cfg.validate();
    return cfg;
}

// "-" writes to stdout.
void emit(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        std::cout.flush();
        if (!std::cout) throw vuplink::IoError("error writing to stdout");
        return;
    }
    vuplink::write_text_file(path, text);
}

std::string render(const vuplink::SweepResult& r) {
    std::ostringstream os;
    vuplink::write_trial_csv(os, r.rows);
    return os.str();
}

void add_run_flags(CLI::App* cmd, Options& opt) {
    cmd->add_option("--config", opt.config_path, "Config file (YAML); defaults are used when omitted");
    cmd->add_option("--seed", opt.seed, "Master seed (overrides run.master_seed)");
    cmd->add_option("--out", opt.out, "Output CSV path, '-' for stdout (overrides run.output_path)");
    cmd->add_option("--trials", opt.trials, "Monte Carlo trials per sweep point");
    cmd->add_option("--strategy", opt.strategies,
                    "Strategy id, repeatable: pareto, cellular, random_relay, exhaustive, distributed");
    cmd->add_option("--threads", opt.threads, "Worker threads; output does not depend on this");
    cmd->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"csv"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hybrid vehicular uplink latency / reliability / utility experiments"};
    app.require_subcommand(1);

    Options opt;
    auto* sweep_distance = app.add_subcommand("sweep-distance", "Monte Carlo sweep over d0 or vehicle density");
    auto* sweep_wired = app.add_subcommand("sweep-wired", "Wired R2I latency over Inp density or RSU spacing");
    auto* compare = app.add_subcommand("compare", "Mean utility per strategy and Pareto improvement");
    auto* validate = app.add_subcommand("validate-config", "Parse and validate a config file");
    auto* defaults = app.add_subcommand("show-defaults", "Print the default config");
    for (auto* cmd : {sweep_distance, sweep_wired, compare}) add_run_flags(cmd, opt);
    validate->add_option("--config", opt.config_path, "Config file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (*defaults) {
            std::cout << vuplink::dump_config(vuplink::default_config());
            return kExitOk;
        }
        if (*validate) {
            const auto cfg = vuplink::load_config(opt.config_path);
            std::cout << "ok: " << cfg.sweep.values().size() << " sweep points, " << cfg.trials << " trials, "
                      << cfg.strategies.size() << " strategies\n";
            return kExitOk;
        }

        const auto cfg = resolve(opt);
        if (*sweep_distance) {
            emit(cfg.output_path, render(vuplink::run_distance_sweep(cfg)));
        } else if (*sweep_wired) {
            emit(cfg.output_path, render(vuplink::run_wired_sweep(cfg)));
        } else if (*compare) {
            const auto summary = vuplink::compare_strategies(cfg);
            emit(cfg.output_path, vuplink::comparison_csv(summary));
            for (const auto& [baseline, best] : summary.max_improvement) {
                std::cerr << "max improvement of pareto over " << vuplink::to_string(baseline) << ": "
                          << vuplink::format_number(100.0 * best.first) << "% at " << vuplink::format_number(best.second)
                          << "\n";
            }
        }
        return kExitOk;
    } catch (const vuplink::ConfigError& e) {
        std::cerr << "invalid config: " << e.what() << "\n";
        return kExitConfig;
    } catch (const vuplink::IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

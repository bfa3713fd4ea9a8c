#pragma once

#include <iosfwd>
#include <string>

#include "wedge/pipeline.hpp"
#include "wedge/synth.hpp"

namespace wedge {

struct RunConfig {
    std::string options_path;
    std::string etf_closes_path;
    std::string holdings_path;
    std::string futures_path;
    std::string refrate_path;
    std::string rates_path;
    std::string out_dir = ".";
    PipelineConfig pipeline;
    bool strict = false;
    bool parallel = true;
};

namespace runner {

// Exit codes shared by the CLI.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitParse = 3;
inline constexpr int kExitNoObservations = 4;

// Flat key=value config files. Unknown keys are errors.
RunConfig load_run_config(const std::string& path);
SynthConfig load_synth_config(const std::string& path);

// Parses a bucket list spec "label:min:max:target;label:min:max:target".
std::vector<BucketSpec> parse_buckets(const std::string& text);

// Full pipeline: parse inputs, run, write wedge_timeseries.csv,
// carry_comparison.csv, summary_stats.csv, wedge_by_bucket.csv and
// run_report.txt into cfg.out_dir. Returns an exit code.
int run(const RunConfig& cfg, std::ostream& log);

// Writes the six canonical inputs plus ground_truth.csv into out_dir.
int run_synth(const SynthConfig& cfg, const std::string& out_dir, std::ostream& log);

} // namespace runner
} // namespace wedge

/**
 * @file commands.hpp
 * @brief Implementations behind the CLI subcommands, callable in-process.
 *
 * Every command is fully determined by (config file, seed); manifests written
 * at run end make runs replayable. Commands throw on invalid input; the CLI
 * wrapper maps exceptions to nonzero exit codes.
 */
#pragma once

#include <optional>
#include <string>

namespace stmd::cli {

struct GenerateOptions {
    std::string config_path;  ///< empty = built-in defaults
    std::string out_dir;
    std::optional<long> seed;
    bool quiet = false;
};

struct RunOptions {
    std::string config_path;  ///< empty = built-in defaults
    std::string sequence_dir;
    std::string variant = "estmd";
    std::string out_dir;
    std::optional<double> gamma;  ///< detection threshold override
    bool quiet = false;
};

struct RocOptions {
    std::string responses_path;  ///< responses file, or a run directory
    std::string gt_path;
    std::string out_path;
    std::string config_path;       ///< optional, for [eval] settings
    std::string gammas = "auto";   ///< "auto", "auto:N", or a decreasing comma list
    std::optional<double> fa_target;
    std::optional<long> warmup;  ///< override; else the run manifest's value
    bool quiet = false;
};

struct SweepOptions {
    std::string config_path;  ///< must provide [sweep] parameter and values
    std::string out_dir;
    std::optional<long> seed;
    std::optional<double> fa_target;
    std::optional<std::string> variant;  ///< default: both
    bool quiet = false;
};

int cmd_generate(const GenerateOptions& opt);
int cmd_run(const RunOptions& opt);
int cmd_roc(const RocOptions& opt);
int cmd_sweep(const SweepOptions& opt);

}  // namespace stmd::cli

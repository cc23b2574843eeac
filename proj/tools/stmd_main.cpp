// stmd: synthetic-scene generation, model execution, ROC evaluation and
// parameter sweeps for small-target motion detection.

#include <stmd/cli/commands.hpp>
#include <stmd/simd/ops.hpp>
#include <stmd/version.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <exception>

int main(int argc, char** argv) {
    CLI::App app{"Small target motion detection toolkit"};
    app.set_version_flag("--version", std::string("stmd ") + stmd::kToolVersion);
    app.require_subcommand(1);

    stmd::cli::GenerateOptions gen_opt;
    auto* gen = app.add_subcommand("generate", "Render a synthetic sequence plus ground truth");
    gen->add_option("--config", gen_opt.config_path, "Config file with a [scene] section");
    gen->add_option("--out", gen_opt.out_dir, "Output directory")->required();
    long gen_seed = 0;
    auto* gen_seed_opt = gen->add_option("--seed", gen_seed, "Override the scene seed");
    gen->add_flag("--quiet", gen_opt.quiet, "Suppress progress output");

    stmd::cli::RunOptions run_opt;
    auto* run = app.add_subcommand("run", "Stream a sequence through the model");
    run->add_option("--config", run_opt.config_path, "Config file with [model]/[eval] sections");
    run->add_option("--seq", run_opt.sequence_dir, "Directory of frame_*.pgm")->required();
    run->add_option("--variant", run_opt.variant, "estmd|feedback")->required();
    run->add_option("--out", run_opt.out_dir, "Output directory")->required();
    double run_gamma = 0.0;
    auto* run_gamma_opt =
        run->add_option("--gamma", run_gamma, "Detection threshold for detections.csv");
    run->add_flag("--quiet", run_opt.quiet, "Suppress progress output");

    stmd::cli::RocOptions roc_opt;
    auto* roc = app.add_subcommand("roc", "Sweep detection thresholds against ground truth");
    roc->add_option("--responses", roc_opt.responses_path, "responses.f32 file or run directory")
        ->required();
    roc->add_option("--gt", roc_opt.gt_path, "Ground-truth CSV")->required();
    roc->add_option("--out", roc_opt.out_path, "Output ROC CSV")->required();
    roc->add_option("--config", roc_opt.config_path, "Config file with an [eval] section");
    roc->add_option("--gammas", roc_opt.gammas, "auto, auto:N, or a decreasing comma list");
    double roc_fa = 0.0;
    auto* roc_fa_opt = roc->add_option("--fa", roc_fa, "Target false-alarm rate (default 10)");
    long roc_warmup = 0;
    auto* roc_warmup_opt =
        roc->add_option("--warmup", roc_warmup, "Frames to exclude (default: run manifest)");
    roc->add_flag("--quiet", roc_opt.quiet, "Suppress progress output");

    stmd::cli::SweepOptions sweep_opt;
    auto* sweep = app.add_subcommand("sweep", "Parameter study: dr_at_fa per value per variant");
    sweep->add_option("--config", sweep_opt.config_path, "Config file with a [sweep] section")
        ->required();
    sweep->add_option("--out", sweep_opt.out_dir, "Output directory")->required();
    long sweep_seed = 0;
    auto* sweep_seed_opt = sweep->add_option("--seed", sweep_seed, "Override the scene seed");
    double sweep_fa = 0.0;
    auto* sweep_fa_opt = sweep->add_option("--fa", sweep_fa, "Target false-alarm rate");
    std::string sweep_variant;
    auto* sweep_variant_opt =
        sweep->add_option("--variant", sweep_variant, "Restrict to one variant");
    sweep->add_flag("--quiet", sweep_opt.quiet, "Suppress progress output");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            if (*gen_seed_opt) gen_opt.seed = gen_seed;
            return stmd::cli::cmd_generate(gen_opt);
        }
        if (run->parsed()) {
            if (*run_gamma_opt) run_opt.gamma = run_gamma;
            return stmd::cli::cmd_run(run_opt);
        }
        if (roc->parsed()) {
            if (*roc_fa_opt) roc_opt.fa_target = roc_fa;
            if (*roc_warmup_opt) roc_opt.warmup = roc_warmup;
            return stmd::cli::cmd_roc(roc_opt);
        }
        if (sweep->parsed()) {
            if (*sweep_seed_opt) sweep_opt.seed = sweep_seed;
            if (*sweep_fa_opt) sweep_opt.fa_target = sweep_fa;
            if (*sweep_variant_opt) sweep_opt.variant = sweep_variant;
            return stmd::cli::cmd_sweep(sweep_opt);
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}

#include <stmd/cli/commands.hpp>

#include <stmd/detect.hpp>
#include <stmd/io/csv.hpp>
#include <stmd/io/manifest.hpp>
#include <stmd/io/pgm.hpp>
#include <stmd/io/response_file.hpp>
#include <stmd/io/settings.hpp>
#include <stmd/pipeline.hpp>
#include <stmd/roc.hpp>
#include <stmd/scene.hpp>
#include <stmd/version.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <stdexcept>

namespace stmd::cli {

namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

io::ConfigFile load_config(const std::string& path) {
    if (path.empty()) return io::ConfigFile{};
    return io::ConfigFile::parse_file(path);
}

void ensure_dir(const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw std::runtime_error("cannot create output directory " + dir + ": " + ec.message());
}

std::string frame_name(long index) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "frame_%06ld.pgm", index);
    return buf;
}

scene::SequenceGenerator make_generator(const scene::SceneConfig& sc) {
    if (!sc.background.empty() && sc.background.rfind("blank:", 0) != 0) {
        return scene::SequenceGenerator(sc, io::read_pgm(sc.background));
    }
    return scene::SequenceGenerator(sc);
}

void note(bool quiet, const std::string& line) {
    if (!quiet) std::printf("%s\n", line.c_str());
}

// Streams frames through a pipeline; sink receives every tap.
void run_stream(Pipeline& pipe, long count, const std::function<Frame(long)>& source,
                const std::function<void(const LayerTap&)>& sink) {
    for (long i = 0; i < count; ++i) {
        LayerTap tap = pipe.step(source(i));
        if (!tap.F.all_finite()) {
            throw std::runtime_error(
                "model output diverged (non-finite response at frame " + std::to_string(i) +
                "); reduce feedback_gain");
        }
        sink(tap);
    }
}

std::vector<std::string> list_sequence_frames(const std::string& dir) {
    if (!fs::is_directory(dir)) throw std::runtime_error("sequence directory not found: " + dir);
    std::vector<std::string> frames;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        std::string name = entry.path().filename().string();
        if (name.rfind("frame_", 0) == 0 && name.size() > 4 &&
            name.substr(name.size() - 4) == ".pgm") {
            frames.push_back(entry.path().string());
        }
    }
    if (frames.empty()) throw std::runtime_error("no frame_*.pgm files in " + dir);
    std::sort(frames.begin(), frames.end());
    return frames;
}

std::vector<double> parse_gamma_grid(const std::string& spec, double max_response,
                                     int default_points) {
    if (spec == "auto") return eval::auto_gamma_grid(max_response, default_points);
    if (spec.rfind("auto:", 0) == 0) {
        int n = std::stoi(spec.substr(5));
        return eval::auto_gamma_grid(max_response, n);
    }
    std::vector<double> gammas;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        std::size_t comma = spec.find(',', pos);
        std::string tok = spec.substr(pos, comma == std::string::npos ? std::string::npos
                                                                      : comma - pos);
        if (!tok.empty()) gammas.push_back(std::stod(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (gammas.empty()) throw std::runtime_error("empty gamma grid");
    return gammas;
}

}  // namespace

// ---------------------------------------------------------------------------
// generate
// ---------------------------------------------------------------------------

int cmd_generate(const GenerateOptions& opt) {
    auto start = Clock::now();
    io::ConfigFile cfg = load_config(opt.config_path);
    scene::SceneConfig sc = io::scene_from_config(cfg);
    if (opt.seed) sc.seed = static_cast<std::uint64_t>(*opt.seed);
    sc.validate();

    ensure_dir(opt.out_dir);
    scene::SequenceGenerator gen = make_generator(sc);

    for (int i = 0; i < gen.frame_count(); ++i) {
        io::write_pgm(opt.out_dir + "/" + frame_name(i), gen.frame(i));
    }
    io::write_ground_truth(opt.out_dir + "/gt.csv", gen.ground_truth_track());

    io::ConfigFile snapshot;
    io::snapshot_scene(snapshot, sc);
    io::ManifestInfo info;
    info.command = "generate";
    info.tool_version = kToolVersion;
    info.seed = static_cast<long>(sc.seed);
    info.wall_ms = elapsed_ms(start);
    info.outputs = "frame_*.pgm gt.csv";
    io::write_manifest(opt.out_dir + "/manifest.txt", std::move(snapshot), info);

    note(opt.quiet, "generated " + std::to_string(gen.frame_count()) + " frames (" +
                        std::to_string(sc.width) + "x" + std::to_string(sc.height) + ") in " +
                        opt.out_dir);
    return 0;
}

// ---------------------------------------------------------------------------
// run
// ---------------------------------------------------------------------------

int cmd_run(const RunOptions& opt) {
    auto start = Clock::now();
    io::ConfigFile cfg = load_config(opt.config_path);
    ModelConfig mc = io::model_from_config(cfg);
    io::EvalConfig ec = io::eval_from_config(cfg);
    if (opt.gamma) ec.gamma = *opt.gamma;
    Variant variant = parse_variant(opt.variant);

    std::vector<std::string> frame_paths = list_sequence_frames(opt.sequence_dir);
    scene::Image8 first = io::read_pgm(frame_paths.front());

    ensure_dir(opt.out_dir);
    Pipeline pipe(mc, variant, first.width, first.height);
    io::ResponseWriter writer(opt.out_dir + "/responses.f32", first.width, first.height);
    std::vector<eval::Detection> detections;

    auto source = [&](long i) {
        scene::Image8 img = io::read_pgm(frame_paths[static_cast<std::size_t>(i)]);
        if (img.width != first.width || img.height != first.height) {
            throw std::runtime_error("sequence frame shape changed at " +
                                     frame_paths[static_cast<std::size_t>(i)]);
        }
        Frame f(img.width, img.height);
        for (std::size_t p = 0; p < img.pixels.size(); ++p) f.data()[p] = img.pixels[p];
        return f;
    };
    auto sink = [&](const LayerTap& tap) {
        writer.append(tap.F);
        if (!tap.warmup) {
            auto dets = eval::extract_detections(tap.F, ec.gamma, tap.frame_index);
            detections.insert(detections.end(), dets.begin(), dets.end());
        }
    };
    run_stream(pipe, static_cast<long>(frame_paths.size()), source, sink);
    writer.close();

    io::write_detections(opt.out_dir + "/detections.csv", detections);

    io::ConfigFile snapshot;
    io::snapshot_model(snapshot, mc);
    io::snapshot_eval(snapshot, ec);
    snapshot.set("run", "variant", variant_name(variant));
    snapshot.set("run", "sequence_dir", opt.sequence_dir);
    io::ManifestInfo info;
    info.command = "run";
    info.tool_version = kToolVersion;
    info.seed = 0;
    info.wall_ms = elapsed_ms(start);
    info.warmup_frames = pipe.warmup_frames();
    info.outputs = "responses.f32 detections.csv";
    io::write_manifest(opt.out_dir + "/manifest.txt", std::move(snapshot), info);

    note(opt.quiet, std::string("ran ") + variant_name(variant) + " over " +
                        std::to_string(frame_paths.size()) + " frames, warmup " +
                        std::to_string(pipe.warmup_frames()) + ", " +
                        std::to_string(detections.size()) + " detections at gamma " +
                        std::to_string(ec.gamma));
    return 0;
}

// ---------------------------------------------------------------------------
// roc
// ---------------------------------------------------------------------------

namespace {

struct LoadedResponses {
    std::vector<Frame> frames;  ///< post-warmup only
    std::vector<scene::GroundTruthEntry> gts;
    long warmup = 0;
    double max_response = 0.0;
};

LoadedResponses load_eval_data(const std::string& responses_path, const std::string& gt_path,
                               std::optional<long> warmup_override) {
    std::string path = responses_path;
    if (fs::is_directory(path)) path += "/responses.f32";

    io::ResponseData data = io::read_responses(path);
    scene::GroundTruthTrack track = io::read_ground_truth(gt_path);
    if (static_cast<long>(track.size()) != data.count) {
        throw std::runtime_error("mismatched frame counts: " + std::to_string(data.count) +
                                 " responses vs " + std::to_string(track.size()) +
                                 " ground-truth rows");
    }

    LoadedResponses out;
    out.warmup = 0;
    if (warmup_override) {
        out.warmup = *warmup_override;
    } else {
        fs::path manifest = fs::path(path).parent_path() / "manifest.txt";
        if (fs::exists(manifest)) {
            out.warmup = io::read_manifest(manifest.string()).get_long("run", "warmup_frames", 0);
        }
    }
    if (out.warmup < 0 || out.warmup >= data.count) {
        throw std::runtime_error("warmup leaves no frames to evaluate");
    }

    out.frames.reserve(data.count - out.warmup);
    for (long i = out.warmup; i < data.count; ++i) {
        out.frames.push_back(data.frame_as_double(i));
        out.gts.push_back(track[static_cast<std::size_t>(i)]);
        out.max_response = std::max(out.max_response, out.frames.back().max_abs());
    }
    return out;
}

std::vector<eval::RocPoint> sweep_loaded(const LoadedResponses& data,
                                         const std::vector<double>& gammas, double radius) {
    std::vector<eval::EvalFrame> eval_frames;
    eval_frames.reserve(data.frames.size());
    for (std::size_t i = 0; i < data.frames.size(); ++i) {
        eval_frames.push_back({&data.frames[i], data.gts[i]});
    }
    return eval::roc_sweep(eval_frames, gammas, radius);
}

}  // namespace

int cmd_roc(const RocOptions& opt) {
    io::ConfigFile cfg = load_config(opt.config_path);
    io::EvalConfig ec = io::eval_from_config(cfg);
    if (opt.fa_target) ec.fa_target = *opt.fa_target;

    LoadedResponses data = load_eval_data(opt.responses_path, opt.gt_path, opt.warmup);
    std::vector<double> gammas = parse_gamma_grid(opt.gammas, data.max_response, ec.roc_points);
    std::vector<eval::RocPoint> roc = sweep_loaded(data, gammas, ec.match_radius);

    io::write_roc(opt.out_path, roc);
    double dr = eval::dr_at_fa(roc, ec.fa_target);
    note(opt.quiet, "roc: " + std::to_string(roc.size()) + " points over " +
                        std::to_string(data.frames.size()) + " frames; dr_at_fa(" +
                        std::to_string(ec.fa_target) + ") = " + std::to_string(dr));
    return 0;
}

// ---------------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------------

namespace {

const char* kSweepParameters[] = {"target_luminance", "target_size", "target_velocity",
                                  "background_velocity", "background_direction"};

void apply_sweep_value(scene::SceneConfig& sc, const std::string& parameter,
                       const std::string& value) {
    if (parameter == "target_luminance") {
        sc.target_luminance = std::stod(value);
    } else if (parameter == "target_size") {
        sc.target_size = std::stoi(value);
        sc.target_width = sc.target_height = 0;
    } else if (parameter == "target_velocity") {
        sc.v_target = std::stod(value);
    } else if (parameter == "background_velocity") {
        sc.v_background = std::copysign(std::stod(value), sc.v_background);
    } else if (parameter == "background_direction") {
        // The target drifts leftward; a rightward background is "opposite".
        double mag = std::fabs(sc.v_background);
        if (value == "opposite") {
            sc.v_background = mag;
        } else if (value == "same") {
            sc.v_background = -mag;
        } else {
            throw std::runtime_error("background_direction value must be same|opposite, got " +
                                     value);
        }
    } else {
        std::string known;
        for (const char* p : kSweepParameters) known += std::string(" ") + p;
        throw std::runtime_error("unknown sweep parameter '" + parameter + "'; expected one of" +
                                 known);
    }
}

struct SweepRow {
    std::string value;
    std::string variant;
    double dr = 0.0;
};

// In-process run: lazy scene, responses kept in RAM at the same float32
// precision the on-disk path uses.
double run_value_variant(const scene::SceneConfig& sc, const ModelConfig& mc,
                         const io::EvalConfig& ec, Variant variant, const std::string& roc_path) {
    scene::SequenceGenerator gen = make_generator(sc);
    Pipeline pipe(mc, variant, sc.width, sc.height);

    long count = gen.frame_count();
    long warmup = std::min<long>(pipe.warmup_frames(), count);
    std::vector<Frame> responses;
    responses.reserve(count - warmup);
    double max_response = 0.0;

    run_stream(
        pipe, count, [&](long i) { return gen.frame_as_input(static_cast<int>(i)); },
        [&](const LayerTap& tap) {
            if (tap.warmup) return;
            Frame f(tap.F.width(), tap.F.height());
            for (std::size_t p = 0; p < f.size(); ++p) {
                f.data()[p] = static_cast<float>(tap.F.data()[p]);
            }
            max_response = std::max(max_response, f.max_abs());
            responses.push_back(std::move(f));
        });
    if (responses.empty()) throw std::runtime_error("sweep: warmup leaves no frames to evaluate");

    std::vector<eval::EvalFrame> eval_frames;
    eval_frames.reserve(responses.size());
    for (std::size_t i = 0; i < responses.size(); ++i) {
        eval_frames.push_back(
            {&responses[i], gen.ground_truth(static_cast<int>(warmup + static_cast<long>(i)))});
    }
    auto gammas = eval::auto_gamma_grid(max_response, ec.roc_points);
    auto roc = eval::roc_sweep(eval_frames, gammas, ec.match_radius);
    if (!roc_path.empty()) io::write_roc(roc_path, roc);
    return eval::dr_at_fa(roc, ec.fa_target);
}

}  // namespace

int cmd_sweep(const SweepOptions& opt) {
    auto start = Clock::now();
    io::ConfigFile cfg = load_config(opt.config_path);
    if (!cfg.has("sweep", "parameter")) {
        throw std::runtime_error("sweep config needs [sweep] parameter = <name>");
    }
    std::string parameter = cfg.get("sweep", "parameter");
    std::string values_spec = cfg.get("sweep", "values");

    scene::SceneConfig base_scene = io::scene_from_config(cfg);
    ModelConfig mc = io::model_from_config(cfg);
    io::EvalConfig ec = io::eval_from_config(cfg);
    if (opt.fa_target) ec.fa_target = *opt.fa_target;
    if (opt.seed) base_scene.seed = static_cast<std::uint64_t>(*opt.seed);

    std::vector<std::string> values;
    std::size_t pos = 0;
    while (pos <= values_spec.size()) {
        std::size_t comma = values_spec.find(',', pos);
        std::string tok = values_spec.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (!tok.empty()) values.push_back(tok);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (values.empty()) throw std::runtime_error("sweep: empty value list");

    std::vector<Variant> variants;
    if (opt.variant) {
        variants.push_back(parse_variant(*opt.variant));
    } else {
        variants = {Variant::estmd, Variant::feedback};
    }

    ensure_dir(opt.out_dir);
    std::vector<SweepRow> rows;
    for (const auto& value : values) {
        scene::SceneConfig sc = base_scene;
        apply_sweep_value(sc, parameter, value);
        sc.validate();
        for (Variant variant : variants) {
            std::string roc_path =
                opt.out_dir + "/" + parameter + "_" + value + "_" + variant_name(variant) +
                "_roc.csv";
            double dr = run_value_variant(sc, mc, ec, variant, roc_path);
            rows.push_back({value, variant_name(variant), dr});
            note(opt.quiet, parameter + "=" + value + " " + variant_name(variant) +
                                ": dr_at_fa(" + std::to_string(ec.fa_target) + ") = " +
                                std::to_string(dr));
        }
    }

    std::string table_path = opt.out_dir + "/sweep.csv";
    {
        std::FILE* f = std::fopen(table_path.c_str(), "w");
        if (!f) throw std::runtime_error("cannot write " + table_path);
        std::fprintf(f, "parameter,value,variant,dr_at_fa,fa_target\n");
        for (const auto& r : rows) {
            std::fprintf(f, "%s,%s,%s,%.17g,%.17g\n", parameter.c_str(), r.value.c_str(),
                         r.variant.c_str(), r.dr, ec.fa_target);
        }
        std::fclose(f);
    }

    io::ConfigFile snapshot;
    io::snapshot_scene(snapshot, base_scene);
    io::snapshot_model(snapshot, mc);
    io::snapshot_eval(snapshot, ec);
    snapshot.set("sweep", "parameter", parameter);
    snapshot.set("sweep", "values", values_spec);
    io::ManifestInfo info;
    info.command = "sweep";
    info.tool_version = kToolVersion;
    info.seed = static_cast<long>(base_scene.seed);
    info.wall_ms = elapsed_ms(start);
    info.outputs = "sweep.csv";
    io::write_manifest(opt.out_dir + "/manifest.txt", std::move(snapshot), info);
    return 0;
}

}  // namespace stmd::cli

/**
 * @file settings.hpp
 * @brief Typed bindings between config files and the scene/model/eval records.
 *
 * Sections: [scene], [model], [eval]. Every key is optional and falls back to
 * the record's default, so a minimal config stays minimal while a manifest
 * snapshot pins everything.
 */
#pragma once

#include <stmd/io/config_file.hpp>
#include <stmd/model_config.hpp>
#include <stmd/scene.hpp>

namespace stmd::io {

struct EvalConfig {
    double gamma = 1.0;        ///< detection threshold for detections.csv
    double fa_target = 10.0;   ///< fixed false-alarm rate for dr_at_fa reads
    double match_radius = 5.0; ///< pixels
    int roc_points = 25;       ///< auto gamma-grid size
};

scene::SceneConfig scene_from_config(const ConfigFile& cfg);
ModelConfig model_from_config(const ConfigFile& cfg);
EvalConfig eval_from_config(const ConfigFile& cfg);

void snapshot_scene(ConfigFile& out, const scene::SceneConfig& sc);
void snapshot_model(ConfigFile& out, const ModelConfig& mc);
void snapshot_eval(ConfigFile& out, const EvalConfig& ec);

}  // namespace stmd::io

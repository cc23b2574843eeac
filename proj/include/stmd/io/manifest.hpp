/// Run manifests: a full config snapshot plus run metadata, written
/// atomically at run end so re-running a manifest reproduces the outputs.
#pragma once

#include <stmd/io/config_file.hpp>

#include <string>

namespace stmd::io {

struct ManifestInfo {
    std::string command;
    std::string tool_version;
    long seed = 0;
    double wall_ms = 0.0;
    long warmup_frames = -1;  ///< -1 when not applicable
    std::string outputs;      ///< space-separated relative paths
};

/// Builds the [run] section on top of an existing snapshot and writes
/// tmp-then-rename.
void write_manifest(const std::string& path, ConfigFile snapshot, const ManifestInfo& info);

ConfigFile read_manifest(const std::string& path);

}  // namespace stmd::io

#include <stmd/io/manifest.hpp>

#include <cstdio>
#include <stdexcept>

namespace stmd::io {

void write_manifest(const std::string& path, ConfigFile snapshot, const ManifestInfo& info) {
    snapshot.set("run", "command", info.command);
    snapshot.set("run", "tool_version", info.tool_version);
    snapshot.set_long("run", "seed", info.seed);
    snapshot.set_double("run", "wall_ms", info.wall_ms);
    if (info.warmup_frames >= 0) snapshot.set_long("run", "warmup_frames", info.warmup_frames);
    if (!info.outputs.empty()) snapshot.set("run", "outputs", info.outputs);

    std::string tmp = path + ".tmp";
    snapshot.write_file(tmp);
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw std::runtime_error("manifest: rename failed for " + path);
    }
}

ConfigFile read_manifest(const std::string& path) { return ConfigFile::parse_file(path); }

}  // namespace stmd::io

/// 8-bit binary PGM (P5) read/write for panoramas and sequence frames.
#pragma once

#include <stmd/scene.hpp>

#include <string>

namespace stmd::io {

scene::Image8 read_pgm(const std::string& path);
void write_pgm(const std::string& path, const scene::Image8& image);

}  // namespace stmd::io

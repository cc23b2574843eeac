#include <stmd/io/pgm.hpp>

#include <cctype>
#include <fstream>
#include <stdexcept>

namespace stmd::io {
namespace {

[[noreturn]] void fail(const std::string& path, const std::string& why) {
    throw std::runtime_error("pgm: " + path + ": " + why);
}

// Reads the next whitespace-delimited token, skipping '#' comment lines.
int read_header_int(std::istream& in, const std::string& path) {
    int c;
    while ((c = in.get()) != EOF) {
        if (c == '#') {
            while ((c = in.get()) != EOF && c != '\n') {
            }
        } else if (!std::isspace(c)) {
            break;
        }
    }
    if (c == EOF) fail(path, "truncated header");
    int value = 0;
    bool any = false;
    while (c != EOF && std::isdigit(c)) {
        value = value * 10 + (c - '0');
        any = true;
        c = in.get();
    }
    if (!any) fail(path, "malformed header token");
    return value;
}

}  // namespace

scene::Image8 read_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(path, "cannot open");
    char magic[2] = {0, 0};
    in.read(magic, 2);
    if (magic[0] != 'P' || magic[1] != '5') fail(path, "not a binary PGM (P5)");
    int width = read_header_int(in, path);
    int height = read_header_int(in, path);
    int maxval = read_header_int(in, path);
    if (width <= 0 || height <= 0) fail(path, "invalid dimensions");
    if (maxval != 255) fail(path, "only 8-bit (maxval 255) PGM is supported");

    scene::Image8 img{width, height,
                      std::vector<std::uint8_t>(static_cast<std::size_t>(width) * height)};
    in.read(reinterpret_cast<char*>(img.pixels.data()),
            static_cast<std::streamsize>(img.pixels.size()));
    if (static_cast<std::size_t>(in.gcount()) != img.pixels.size()) fail(path, "truncated pixel data");
    return img;
}

void write_pgm(const std::string& path, const scene::Image8& image) {
    if (image.width <= 0 || image.height <= 0) fail(path, "empty image");
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(path, "cannot open for writing");
    out << "P5\n" << image.width << " " << image.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(image.pixels.data()),
              static_cast<std::streamsize>(image.pixels.size()));
    if (!out) fail(path, "write failed");
}

}  // namespace stmd::io

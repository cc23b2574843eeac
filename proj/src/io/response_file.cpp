#include <stmd/io/response_file.hpp>

#include <bit>
#include <cstdio>
#include <stdexcept>

static_assert(std::endian::native == std::endian::little,
              "response files are little-endian; big-endian hosts are unsupported");
static_assert(sizeof(float) == 4);

namespace stmd::io {
namespace {

constexpr char kMagic[] = "STMDF32";
// Fixed-width count field so it can be patched in place when the writer closes.
constexpr int kCountDigits = 12;

[[noreturn]] void fail(const std::string& path, const std::string& why) {
    throw std::runtime_error("responses: " + path + ": " + why);
}

std::string header_string(int width, int height, long count) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%s %d %d %0*ld\n", kMagic, width, height, kCountDigits,
                  count);
    return buf;
}

}  // namespace

ResponseWriter::ResponseWriter(const std::string& path, int width, int height)
    : path_(path), out_(path, std::ios::binary | std::ios::trunc), width_(width), height_(height) {
    if (width <= 0 || height <= 0) fail(path, "invalid frame size");
    if (!out_) fail(path, "cannot open for writing");
    out_ << header_string(width_, height_, 0);
}

ResponseWriter::~ResponseWriter() {
    try {
        close();
    } catch (...) {
        // Destructor must not throw; an incomplete file keeps count 0.
    }
}

void ResponseWriter::append(const Frame& frame) {
    if (closed_) fail(path_, "append after close");
    if (frame.width() != width_ || frame.height() != height_) fail(path_, "frame shape mismatch");
    std::vector<float> row(frame.size());
    for (std::size_t i = 0; i < row.size(); ++i) row[i] = static_cast<float>(frame.data()[i]);
    out_.write(reinterpret_cast<const char*>(row.data()),
               static_cast<std::streamsize>(row.size() * sizeof(float)));
    if (!out_) fail(path_, "write failed");
    ++count_;
}

void ResponseWriter::close() {
    if (closed_) return;
    closed_ = true;
    out_.seekp(0);
    out_ << header_string(width_, height_, count_);
    out_.close();
    if (!out_) fail(path_, "finalizing header failed");
}

Frame ResponseData::frame_as_double(long index) const {
    Frame f(width, height);
    const float* src = frame(index);
    for (std::size_t i = 0; i < f.size(); ++i) f.data()[i] = src[i];
    return f;
}

ResponseData read_responses(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(path, "cannot open");
    std::string magic;
    ResponseData data;
    in >> magic >> data.width >> data.height >> data.count;
    if (!in || magic != kMagic) fail(path, "bad header");
    if (data.width <= 0 || data.height <= 0 || data.count < 0) fail(path, "bad header fields");
    in.get();  // newline after the header
    std::size_t n = static_cast<std::size_t>(data.count) * data.width * data.height;
    data.values.resize(n);
    in.read(reinterpret_cast<char*>(data.values.data()),
            static_cast<std::streamsize>(n * sizeof(float)));
    if (static_cast<std::size_t>(in.gcount()) != n * sizeof(float)) fail(path, "truncated payload");
    return data;
}

}  // namespace stmd::io

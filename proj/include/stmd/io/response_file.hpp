/**
 * @file response_file.hpp
 * @brief Response-map container: a small text header (width, height, count)
 *        followed by raw little-endian 32-bit floats, frame after frame.
 *
 * The fixed binary payload makes round-trips bit-exact, which the oracle
 * tests and the variant-equivalence checks rely on.
 */
#pragma once

#include <stmd/frame.hpp>

#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

namespace stmd::io {

/// Incremental writer; the header's frame count is patched on close.
class ResponseWriter {
public:
    ResponseWriter(const std::string& path, int width, int height);
    ~ResponseWriter();

    ResponseWriter(const ResponseWriter&) = delete;
    ResponseWriter& operator=(const ResponseWriter&) = delete;

    /// Appends one frame, cast pixel-wise to float32.
    void append(const Frame& frame);

    long count() const { return count_; }

    /// Finalizes the header; called by the destructor if needed.
    void close();

private:
    std::string path_;
    std::ofstream out_;
    int width_, height_;
    long count_ = 0;
    bool closed_ = false;
};

struct ResponseData {
    int width = 0;
    int height = 0;
    long count = 0;
    std::vector<float> values;  ///< count * height * width, row-major frames

    const float* frame(long index) const {
        return values.data() + static_cast<std::size_t>(index) * width * height;
    }
    /// Frame widened back to doubles for evaluation.
    Frame frame_as_double(long index) const;
};

ResponseData read_responses(const std::string& path);

}  // namespace stmd::io

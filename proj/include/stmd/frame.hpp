/**
 * @file frame.hpp
 * @brief Frame: one grayscale image of real-valued luminance / response.
 *
 * Frames are the streaming unit of the whole toolkit. Storage is row-major
 * double; 8-bit sources map to [0,255] without rescaling.
 */
#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace stmd {

class Frame {
public:
    Frame() = default;

    Frame(int width, int height, double fill = 0.0)
        : width_(width), height_(height) {
        if (width <= 0 || height <= 0) {
            throw std::invalid_argument("Frame: dimensions must be positive");
        }
        values_.assign(static_cast<std::size_t>(width) * height, fill);
    }

    int width() const { return width_; }
    int height() const { return height_; }
    std::size_t size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }

    double* data() { return values_.data(); }
    const double* data() const { return values_.data(); }

    double* row(int y) { return values_.data() + static_cast<std::size_t>(y) * width_; }
    const double* row(int y) const { return values_.data() + static_cast<std::size_t>(y) * width_; }

    double& at(int x, int y) { return values_[static_cast<std::size_t>(y) * width_ + x]; }
    double at(int x, int y) const { return values_[static_cast<std::size_t>(y) * width_ + x]; }

    bool same_shape(const Frame& other) const {
        return width_ == other.width_ && height_ == other.height_;
    }

    /// Largest absolute pixel value (0 for an empty frame).
    double max_abs() const;

    /// Largest pixel value; throws on empty frame.
    double max_value() const;

    bool all_finite() const;

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<double> values_;
};

}  // namespace stmd

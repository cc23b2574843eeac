#include <stmd/frame.hpp>

#include <cmath>

namespace stmd {

double Frame::max_abs() const {
    double m = 0.0;
    for (double v : values_) {
        double a = std::fabs(v);
        if (a > m) m = a;
    }
    return m;
}

double Frame::max_value() const {
    if (values_.empty()) throw std::invalid_argument("Frame::max_value: empty frame");
    double m = values_[0];
    for (double v : values_) {
        if (v > m) m = v;
    }
    return m;
}

bool Frame::all_finite() const {
    for (double v : values_) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

}  // namespace stmd

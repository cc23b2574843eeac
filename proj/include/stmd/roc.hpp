/**
 * @file roc.hpp
 * @brief ROC sweeps over the detection threshold and fixed-false-alarm reads.
 */
#pragma once

#include <stmd/detect.hpp>
#include <stmd/frame.hpp>
#include <stmd/scene.hpp>

#include <vector>

namespace stmd::eval {

struct RocPoint {
    double gamma = 0.0;
    double detection_rate = 0.0;
    double false_alarms = 0.0;
};

/// One evaluated frame: the response map plus its ground truth. Warm-up
/// frames are excluded by the caller before the sweep.
struct EvalFrame {
    const Frame* response = nullptr;
    scene::GroundTruthEntry gt;
};

/// One RocPoint per threshold; `gammas` must be strictly decreasing and
/// non-empty. Along the sweep both rates are non-decreasing.
std::vector<RocPoint> roc_sweep(const std::vector<EvalFrame>& frames,
                                const std::vector<double>& gammas, double radius_px = 5.0);

/// Log-spaced decreasing threshold grid from just below `max_response` down
/// to `max_response * 1e-7`, with a final 0 so the sweep always reaches the
/// every-positive-pixel regime.
std::vector<double> auto_gamma_grid(double max_response, int count);

/// Detection rate at a fixed false-alarm rate: linear interpolation between
/// the bracketing sweep points, clamped to the endpoints outside the range.
double dr_at_fa(const std::vector<RocPoint>& roc, double target_fa = 10.0);

}  // namespace stmd::eval

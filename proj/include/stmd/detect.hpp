/**
 * @file detect.hpp
 * @brief Thresholding, clustering and ground-truth matching of response maps.
 *
 * Supra-threshold pixels are grouped by 8-connectivity; each connected
 * component yields one detection at its maximum-score pixel. A detection
 * within the match radius (Euclidean, boundary inclusive) of the single
 * ground-truth target counts true; every other detection counts false.
 */
#pragma once

#include <stmd/frame.hpp>
#include <stmd/scene.hpp>

#include <vector>

namespace stmd::eval {

struct Detection {
    long frame_index = 0;
    int x = 0;
    int y = 0;
    double score = 0.0;  ///< peak response of the component
};

struct MatchCounts {
    long true_count = 0;
    long false_count = 0;
};

/// Connected components of {F > gamma}; one detection per component at its
/// max pixel, ties broken by row-major order. Empty result is valid.
std::vector<Detection> extract_detections(const Frame& response, double gamma,
                                          long frame_index = 0);

/// Single-target matching: the highest-scoring detection within `radius_px`
/// of the ground truth counts as at most one true detection; the rest are
/// false. An absent target makes every detection false.
MatchCounts match_frame(const std::vector<Detection>& detections,
                        const scene::GroundTruthEntry& gt, double radius_px = 5.0);

struct Metrics {
    double detection_rate = 0.0;  ///< true detections / frames with a target
    double false_alarms = 0.0;    ///< false detections / frames
};

/// Aggregates per-frame counts. Throws when no frame carries a target
/// (detection rate undefined).
Metrics compute_metrics(const std::vector<MatchCounts>& per_frame, long frames_with_target,
                        long frame_count);

}  // namespace stmd::eval

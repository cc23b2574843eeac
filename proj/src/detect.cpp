#include <stmd/detect.hpp>

#include <stdexcept>

namespace stmd::eval {

std::vector<Detection> extract_detections(const Frame& response, double gamma,
                                          long frame_index) {
    const int w = response.width();
    const int h = response.height();
    std::vector<Detection> out;
    std::vector<std::uint8_t> visited(response.size(), 0);
    std::vector<int> stack;

    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            std::size_t idx = static_cast<std::size_t>(y) * w + x;
            if (visited[idx] || !(response.data()[idx] > gamma)) continue;

            // Flood-fill one 8-connected component, tracking its peak. The
            // row-major scan order makes the first-seen peak win ties.
            Detection det{frame_index, x, y, response.data()[idx]};
            visited[idx] = 1;
            stack.push_back(static_cast<int>(idx));
            while (!stack.empty()) {
                int cur = stack.back();
                stack.pop_back();
                int cy = cur / w, cx = cur % w;
                double v = response.data()[cur];
                if (v > det.score) {
                    det.score = v;
                    det.x = cx;
                    det.y = cy;
                }
                for (int dy = -1; dy <= 1; ++dy) {
                    for (int dx = -1; dx <= 1; ++dx) {
                        if (dx == 0 && dy == 0) continue;
                        int nx = cx + dx, ny = cy + dy;
                        if (nx < 0 || nx >= w || ny < 0 || ny >= h) continue;
                        std::size_t nidx = static_cast<std::size_t>(ny) * w + nx;
                        if (visited[nidx] || !(response.data()[nidx] > gamma)) continue;
                        visited[nidx] = 1;
                        stack.push_back(static_cast<int>(nidx));
                    }
                }
            }
            out.push_back(det);
        }
    }
    return out;
}

MatchCounts match_frame(const std::vector<Detection>& detections,
                        const scene::GroundTruthEntry& gt, double radius_px) {
    MatchCounts counts;
    if (!gt.present) {
        counts.false_count = static_cast<long>(detections.size());
        return counts;
    }
    const double r2 = radius_px * radius_px;
    int best = -1;
    for (std::size_t i = 0; i < detections.size(); ++i) {
        double dx = detections[i].x - gt.x;
        double dy = detections[i].y - gt.y;
        if (dx * dx + dy * dy <= r2) {
            if (best < 0 || detections[i].score > detections[best].score) {
                best = static_cast<int>(i);
            }
        }
    }
    counts.true_count = best >= 0 ? 1 : 0;
    counts.false_count = static_cast<long>(detections.size()) - counts.true_count;
    return counts;
}

Metrics compute_metrics(const std::vector<MatchCounts>& per_frame, long frames_with_target,
                        long frame_count) {
    if (frames_with_target <= 0) {
        throw std::invalid_argument("compute_metrics: no frames carry a target");
    }
    if (frame_count <= 0) {
        throw std::invalid_argument("compute_metrics: no frames evaluated");
    }
    long true_total = 0, false_total = 0;
    for (const auto& m : per_frame) {
        true_total += m.true_count;
        false_total += m.false_count;
    }
    Metrics out;
    out.detection_rate = static_cast<double>(true_total) / frames_with_target;
    out.false_alarms = static_cast<double>(false_total) / frame_count;
    return out;
}

}  // namespace stmd::eval

#include <stmd/roc.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace stmd::eval {

std::vector<RocPoint> roc_sweep(const std::vector<EvalFrame>& frames,
                                const std::vector<double>& gammas, double radius_px) {
    if (gammas.empty()) throw std::invalid_argument("roc_sweep: empty gamma grid");
    for (std::size_t i = 1; i < gammas.size(); ++i) {
        if (!(gammas[i] < gammas[i - 1])) {
            throw std::invalid_argument("roc_sweep: gammas must be strictly decreasing");
        }
    }
    if (frames.empty()) throw std::invalid_argument("roc_sweep: no frames");

    long frames_with_target = 0;
    for (const auto& f : frames) {
        if (f.gt.present) ++frames_with_target;
    }

    std::vector<RocPoint> roc;
    roc.reserve(gammas.size());
    for (double gamma : gammas) {
        std::vector<MatchCounts> counts;
        counts.reserve(frames.size());
        for (const auto& f : frames) {
            auto dets = extract_detections(*f.response, gamma, f.gt.frame_index);
            counts.push_back(match_frame(dets, f.gt, radius_px));
        }
        Metrics m = compute_metrics(counts, frames_with_target,
                                    static_cast<long>(frames.size()));
        roc.push_back({gamma, m.detection_rate, m.false_alarms});
    }
    return roc;
}

std::vector<double> auto_gamma_grid(double max_response, int count) {
    if (count < 1) throw std::invalid_argument("auto_gamma_grid: count must be >= 1");
    std::vector<double> gammas;
    if (!(max_response > 0.0)) {
        // Degenerate all-zero responses: any positive threshold, then zero.
        gammas.push_back(1.0);
        gammas.push_back(0.0);
        return gammas;
    }
    double top = max_response * 0.999;
    double bottom = max_response * 1e-7;
    if (count == 1) {
        gammas.push_back(top);
    } else {
        double ratio = std::pow(bottom / top, 1.0 / (count - 1));
        double g = top;
        for (int i = 0; i < count; ++i) {
            gammas.push_back(g);
            g *= ratio;
        }
    }
    gammas.push_back(0.0);
    return gammas;
}

double dr_at_fa(const std::vector<RocPoint>& roc, double target_fa) {
    if (roc.empty()) throw std::invalid_argument("dr_at_fa: empty sweep");
    // Sweep order is decreasing gamma, so false alarms are non-decreasing.
    for (const auto& p : roc) {
        if (p.false_alarms == target_fa) return p.detection_rate;
    }
    if (target_fa <= roc.front().false_alarms) return roc.front().detection_rate;
    if (target_fa >= roc.back().false_alarms) return roc.back().detection_rate;
    for (std::size_t i = 1; i < roc.size(); ++i) {
        const auto& lo = roc[i - 1];
        const auto& hi = roc[i];
        if (lo.false_alarms < target_fa && target_fa < hi.false_alarms) {
            double t = (target_fa - lo.false_alarms) / (hi.false_alarms - lo.false_alarms);
            return lo.detection_rate + t * (hi.detection_rate - lo.detection_rate);
        }
    }
    return roc.back().detection_rate;
}

}  // namespace stmd::eval

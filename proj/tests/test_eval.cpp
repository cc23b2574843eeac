// Detection extraction, matching, metrics and ROC sweep tests.

#include <doctest.h>

#include <stmd/detect.hpp>
#include <stmd/roc.hpp>

#include "support/test_util.hpp"

#include <cmath>
#include <set>
#include <vector>

using namespace stmd;
using namespace stmd::eval;

namespace {

scene::GroundTruthEntry gt_at(double x, double y, bool present = true) {
    scene::GroundTruthEntry e;
    e.x = x;
    e.y = y;
    e.present = present;
    return e;
}

// Brute-force clustering oracle: label components by repeated neighbor
// merging instead of flood fill.
int count_components(const Frame& f, double gamma) {
    int w = f.width(), h = f.height();
    std::vector<int> label(f.size(), -1);
    int next = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f.data()[i] > gamma) label[i] = next++;
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (int y = 0; y < h; ++y) {
            for (int x = 0; x < w; ++x) {
                int idx = y * w + x;
                if (label[idx] < 0) continue;
                for (int dy = -1; dy <= 1; ++dy) {
                    for (int dx = -1; dx <= 1; ++dx) {
                        int nx = x + dx, ny = y + dy;
                        if (nx < 0 || ny < 0 || nx >= w || ny >= h) continue;
                        int nidx = ny * w + nx;
                        if (label[nidx] >= 0 && label[nidx] < label[idx]) {
                            label[idx] = label[nidx];
                            changed = true;
                        }
                    }
                }
            }
        }
    }
    // After relaxation every pixel holds its component's minimum label.
    std::set<int> roots;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (label[i] >= 0) roots.insert(label[i]);
    }
    return static_cast<int>(roots.size());
}

}  // namespace

TEST_CASE("extract: all sub-threshold gives an empty list") {
    Frame f(6, 6, 0.5);
    CHECK(extract_detections(f, 1.0).empty());
}

TEST_CASE("extract: one isolated pixel, exact location and score") {
    Frame f(8, 8, 0.0);
    f.at(3, 4) = 7.5;
    auto dets = extract_detections(f, 1.0, 42);
    REQUIRE(dets.size() == 1);
    CHECK(dets[0].x == 3);
    CHECK(dets[0].y == 4);
    CHECK(dets[0].score == 7.5);
    CHECK(dets[0].frame_index == 42);
}

TEST_CASE("extract: two blobs separated by a sub-threshold gap") {
    Frame f(10, 10, 0.0);
    // Blob A: L-shaped, peak 9 at (2,2). Blob B: diagonal-connected pair.
    f.at(1, 2) = 4.0;
    f.at(2, 2) = 9.0;
    f.at(2, 3) = 5.0;
    f.at(7, 7) = 6.0;
    f.at(8, 8) = 3.0;
    auto dets = extract_detections(f, 2.0);
    REQUIRE(dets.size() == 2);
    CHECK(dets[0].x == 2);
    CHECK(dets[0].y == 2);
    CHECK(dets[0].score == 9.0);
    CHECK(dets[1].x == 7);
    CHECK(dets[1].y == 7);
    CHECK(dets[1].score == 6.0);
}

TEST_CASE("extract: diagonal pixels are one component (8-connectivity)") {
    Frame f(5, 5, 0.0);
    f.at(1, 1) = 2.0;
    f.at(2, 2) = 3.0;
    f.at(3, 3) = 1.5;
    CHECK(extract_detections(f, 1.0).size() == 1);
}

TEST_CASE("extract: threshold is strict (F > gamma)") {
    Frame f(3, 3, 0.0);
    f.at(1, 1) = 1.0;
    CHECK(extract_detections(f, 1.0).empty());
    CHECK(extract_detections(f, 0.999).size() == 1);
}

TEST_CASE("extract matches a component-count oracle on random maps") {
    testutil::Rng rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        Frame f(12, 12, 0.0);
        for (std::size_t i = 0; i < f.size(); ++i) {
            f.data()[i] = rng.uniform(0.0, 1.0) < 0.25 ? rng.uniform(1.0, 5.0) : 0.0;
        }
        auto dets = extract_detections(f, 0.5);
        CHECK(static_cast<int>(dets.size()) == count_components(f, 0.5));
    }
}

TEST_CASE("match: 5 px boundary is inclusive") {
    std::vector<Detection> dets = {{0, 100, 100, 3.0}};
    auto res = match_frame(dets, gt_at(103.0, 104.0), 5.0);  // distance exactly 5
    CHECK(res.true_count == 1);
    CHECK(res.false_count == 0);

    res = match_frame(dets, gt_at(104.0, 104.0), 5.0);  // distance ~5.66
    CHECK(res.true_count == 0);
    CHECK(res.false_count == 1);
}

TEST_CASE("match: at most one true per frame, rest are false") {
    std::vector<Detection> dets = {{0, 10, 10, 1.0}, {0, 12, 10, 5.0}, {0, 40, 40, 2.0}};
    auto res = match_frame(dets, gt_at(11.0, 10.0), 5.0);
    CHECK(res.true_count == 1);
    CHECK(res.false_count == 2);
    CHECK(res.true_count + res.false_count == static_cast<long>(dets.size()));
}

TEST_CASE("match: absent target makes everything false") {
    std::vector<Detection> dets = {{0, 10, 10, 1.0}, {0, 12, 10, 5.0}};
    auto res = match_frame(dets, gt_at(11.0, 10.0, false), 5.0);
    CHECK(res.true_count == 0);
    CHECK(res.false_count == 2);
}

TEST_CASE("match is translation invariant") {
    testutil::Rng rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        double tx = rng.uniform(-30.0, 30.0);
        double ty = rng.uniform(-30.0, 30.0);
        std::vector<Detection> dets, shifted;
        for (int i = 0; i < 5; ++i) {
            int x = rng.uniform_int(50, 80), y = rng.uniform_int(50, 80);
            dets.push_back({0, x, y, rng.uniform(1.0, 9.0)});
            shifted.push_back({0, x + static_cast<int>(tx), y + static_cast<int>(ty),
                               dets.back().score});
        }
        auto a = match_frame(dets, gt_at(64.0, 66.0), 5.0);
        auto b = match_frame(shifted, gt_at(64.0 + static_cast<int>(tx),
                                            66.0 + static_cast<int>(ty)), 5.0);
        CHECK(a.true_count == b.true_count);
        CHECK(a.false_count == b.false_count);
    }
}

TEST_CASE("metrics: stated arithmetic") {
    std::vector<MatchCounts> frames = {{1, 0}, {1, 3}, {0, 2}, {1, 15}};
    auto m = compute_metrics(frames, 4, 10);
    CHECK(m.detection_rate == doctest::Approx(0.75));
    CHECK(m.false_alarms == doctest::Approx(2.0));

    std::vector<MatchCounts> none = {{0, 0}, {0, 0}};
    auto z = compute_metrics(none, 2, 2);
    CHECK(z.detection_rate == 0.0);
    CHECK(z.false_alarms == 0.0);

    CHECK_THROWS_AS(compute_metrics(frames, 0, 10), std::invalid_argument);
}

TEST_CASE("roc sweep: endpoints and monotonicity") {
    // Response: target blob at gt plus one noise blob.
    Frame f(20, 20, 0.0);
    f.at(5, 5) = 10.0;
    f.at(5, 6) = 8.0;
    f.at(15, 15) = 4.0;
    std::vector<EvalFrame> frames = {{&f, gt_at(5.0, 5.0)}};

    std::vector<double> gammas = {11.0, 9.0, 5.0, 3.0, 0.1};
    auto roc = roc_sweep(frames, gammas);
    REQUIRE(roc.size() == 5);
    CHECK(roc[0].detection_rate == 0.0);  // above the global max
    CHECK(roc[0].false_alarms == 0.0);
    CHECK(roc[1].detection_rate == 1.0);  // only the target blob
    CHECK(roc[1].false_alarms == 0.0);
    CHECK(roc[3].false_alarms == 1.0);    // noise blob crosses at gamma=3
    for (std::size_t i = 1; i < roc.size(); ++i) {
        CHECK(roc[i].detection_rate >= roc[i - 1].detection_rate);
        CHECK(roc[i].false_alarms >= roc[i - 1].false_alarms);
    }

    CHECK_THROWS_AS(roc_sweep(frames, {}), std::invalid_argument);
    CHECK_THROWS_AS(roc_sweep(frames, {1.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(roc_sweep(frames, {1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("roc sweep matches a per-gamma recomputation oracle") {
    testutil::Rng rng(29);
    std::vector<Frame> maps;
    std::vector<scene::GroundTruthEntry> gts;
    for (int t = 0; t < 6; ++t) {
        Frame f(15, 15, 0.0);
        for (std::size_t i = 0; i < f.size(); ++i) {
            f.data()[i] = rng.uniform(0.0, 1.0) < 0.2 ? rng.uniform(0.5, 4.0) : 0.0;
        }
        maps.push_back(std::move(f));
        gts.push_back(gt_at(rng.uniform(2.0, 12.0), rng.uniform(2.0, 12.0), t % 5 != 0));
        gts.back().frame_index = t;
    }
    std::vector<EvalFrame> frames;
    for (int t = 0; t < 6; ++t) frames.push_back({&maps[t], gts[t]});

    std::vector<double> gammas = {3.5, 2.0, 1.0, 0.6};
    auto roc = roc_sweep(frames, gammas);
    long with_target = 0;
    for (const auto& g : gts) {
        if (g.present) ++with_target;
    }
    for (std::size_t gi = 0; gi < gammas.size(); ++gi) {
        long true_total = 0, false_total = 0;
        for (int t = 0; t < 6; ++t) {
            auto dets = extract_detections(maps[t], gammas[gi], t);
            auto counts = match_frame(dets, gts[t], 5.0);
            true_total += counts.true_count;
            false_total += counts.false_count;
        }
        CHECK(roc[gi].detection_rate ==
              doctest::Approx(static_cast<double>(true_total) / with_target));
        CHECK(roc[gi].false_alarms == doctest::Approx(static_cast<double>(false_total) / 6.0));
    }
}

TEST_CASE("dr_at_fa: interpolation, exact hit, clamping") {
    std::vector<RocPoint> roc = {
        {5.0, 0.2, 1.0}, {4.0, 0.6, 8.0}, {3.0, 0.8, 12.0}, {2.0, 0.9, 20.0}};
    CHECK(dr_at_fa(roc, 10.0) == doctest::Approx(0.7));  // midway between 8 and 12
    std::vector<RocPoint> exact = {{5.0, 0.2, 1.0}, {4.0, 0.65, 10.0}, {3.0, 0.8, 12.0}};
    CHECK(dr_at_fa(exact, 10.0) == doctest::Approx(0.65));
    std::vector<RocPoint> low = {{5.0, 0.2, 1.0}, {4.0, 0.6, 4.0}};
    CHECK(dr_at_fa(low, 10.0) == doctest::Approx(0.6));  // clamp to largest-FA point
    CHECK(dr_at_fa(low, 0.5) == doctest::Approx(0.2));   // clamp at the other end
    CHECK_THROWS_AS(dr_at_fa({}, 10.0), std::invalid_argument);
}

TEST_CASE("auto gamma grid is strictly decreasing and ends at zero") {
    auto g = auto_gamma_grid(123.0, 25);
    CHECK(g.size() == 26);
    for (std::size_t i = 1; i < g.size(); ++i) CHECK(g[i] < g[i - 1]);
    CHECK(g.back() == 0.0);
    auto z = auto_gamma_grid(0.0, 25);
    CHECK(z.front() > 0.0);
    CHECK(z.back() == 0.0);
}

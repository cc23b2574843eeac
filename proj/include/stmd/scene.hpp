/**
 * @file scene.hpp
 * @brief Deterministic synthetic stimuli: a panoramic background scrolling at
 *        a configurable velocity with a small dark target following a
 *        sinusoidal trajectory, plus exact per-frame ground truth.
 */
#pragma once

#include <stmd/frame.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace stmd::scene {

/// 8-bit grayscale raster, the unit panoramas and rendered frames use.
struct Image8 {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;  // row-major

    std::uint8_t at(int x, int y) const {
        return pixels[static_cast<std::size_t>(y) * width + x];
    }
    std::uint8_t& at(int x, int y) {
        return pixels[static_cast<std::size_t>(y) * width + x];
    }
};

struct SceneConfig {
    int width = 500;              ///< frame width, pixels
    int height = 250;             ///< frame height, pixels
    double fps = 1000.0;          ///< temporal sampling frequency, Hz
    double duration_ms = 1000.0;  ///< sequence length

    /// Background source: empty = procedural clutter from `seed`;
    /// "blank:<v>" = uniform luminance v; otherwise a PGM panorama path.
    std::string background;
    std::uint64_t seed = 1;

    double v_background = 250.0;  ///< px/s; positive drifts the background rightward
    double v_target = 500.0;      ///< px/s; positive moves the target leftward
    int target_size = 5;          ///< square side, pixels
    int target_width = 0;         ///< optional x-extent override (0 = target_size)
    int target_height = 0;        ///< optional y-extent override (0 = target_size)
    double target_luminance = 50.0;
    double t_offset_ms = 300.0;   ///< trajectory time offset
    bool wrap = true;             ///< wrap panorama sampling horizontally

    int frame_count() const;
    int target_w() const { return target_width > 0 ? target_width : target_size; }
    int target_h() const { return target_height > 0 ? target_height : target_size; }

    void validate() const;
};

struct GroundTruthEntry {
    long frame_index = 0;
    double t_ms = 0.0;
    double x = 0.0;  ///< unrounded target center
    double y = 0.0;
    bool present = false;
};

using GroundTruthTrack = std::vector<GroundTruthEntry>;

/// Closed-form target center at time t:
///   x = width - v_target * (t + t_offset) / 1000
///   y = height/2 + 15 * sin(4*pi*(t + t_offset)/1000)
/// Throws when t is outside [0, duration].
void trajectory(double t_ms, const SceneConfig& cfg, double& x, double& y);

/// Band-limited multi-octave value noise with well-separated dark blobs at
/// small-target-like scales (roughly 3-15 px across). Horizontally tileable;
/// pure function of (seed, width, height).
Image8 procedural_clutter(std::uint64_t seed, int width, int height);

/// Lazy sequence generator: frame(i) renders frame i from scratch, so
/// generation is bit-deterministic and frames can be produced in any order.
class SequenceGenerator {
public:
    explicit SequenceGenerator(const SceneConfig& cfg);
    SequenceGenerator(const SceneConfig& cfg, Image8 panorama);

    int frame_count() const { return cfg_.frame_count(); }
    const SceneConfig& config() const { return cfg_; }
    const Image8& panorama() const { return panorama_; }

    Image8 frame(int index) const;
    GroundTruthEntry ground_truth(int index) const;
    GroundTruthTrack ground_truth_track() const;

    /// Frame as model input: 8-bit values mapped to [0,255] doubles.
    Frame frame_as_input(int index) const;

private:
    SceneConfig cfg_;
    Image8 panorama_;
};

/// Convenience: materialize all frames plus the track at once.
std::pair<std::vector<Image8>, GroundTruthTrack> generate_sequence(const SceneConfig& cfg);

}  // namespace stmd::scene

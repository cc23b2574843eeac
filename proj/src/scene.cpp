#include <stmd/scene.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace stmd::scene {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::uint64_t mix(std::uint64_t a, std::uint64_t b) { return splitmix64(a ^ (b + 0x9E3779B97F4A7C15ull)); }

double unit_double(std::uint64_t h) { return static_cast<double>(h >> 11) * 0x1.0p-53; }

double smoothstep(double t) { return t * t * (3.0 - 2.0 * t); }

int floor_mod(long v, int m) {
    long r = v % m;
    if (r < 0) r += m;
    return static_cast<int>(r);
}

// Horizontally tileable value noise: the x lattice wraps with period
// `lattice_x` cells spanning exactly `width` pixels, so a scrolling window
// never crosses a seam.
double octave_noise(std::uint64_t seed, int octave, int lattice_x, double sx, double sy, int x,
                    int y) {
    double u = x / sx;
    double v = y / sy;
    int ix = static_cast<int>(std::floor(u));
    int iy = static_cast<int>(std::floor(v));
    double fx = smoothstep(u - ix);
    double fy = smoothstep(v - iy);

    auto corner = [&](int gx, int gy) {
        std::uint64_t h = mix(mix(mix(seed, 0x5eedull + octave), static_cast<std::uint64_t>(
                                      floor_mod(gx, lattice_x))),
                              static_cast<std::uint64_t>(gy));
        return unit_double(h);
    };
    double v00 = corner(ix, iy);
    double v10 = corner(ix + 1, iy);
    double v01 = corner(ix, iy + 1);
    double v11 = corner(ix + 1, iy + 1);
    double top = v00 + (v10 - v00) * fx;
    double bot = v01 + (v11 - v01) * fx;
    return top + (bot - top) * fy;
}

}  // namespace

int SceneConfig::frame_count() const {
    return static_cast<int>(std::lround(duration_ms * fps / 1000.0));
}

void SceneConfig::validate() const {
    if (width <= 0 || height <= 0) throw std::invalid_argument("scene: frame size must be positive");
    if (!(fps > 0.0)) throw std::invalid_argument("scene: fps must be positive");
    if (!(duration_ms > 0.0)) throw std::invalid_argument("scene: duration must be positive");
    if (frame_count() < 1) throw std::invalid_argument("scene: duration yields no frames");
    if (target_w() < 1 || target_h() < 1) {
        throw std::invalid_argument("scene: target size must be at least 1 px");
    }
    if (target_w() > width || target_h() > height) {
        throw std::invalid_argument("scene: target does not fit inside the frame");
    }
    if (target_luminance < 0.0 || target_luminance > 255.0) {
        throw std::invalid_argument("scene: target luminance must be in [0,255]");
    }
}

void trajectory(double t_ms, const SceneConfig& cfg, double& x, double& y) {
    if (t_ms < 0.0 || t_ms > cfg.duration_ms) {
        throw std::invalid_argument("trajectory: t outside [0, duration]");
    }
    double s = (t_ms + cfg.t_offset_ms) / 1000.0;
    x = cfg.width - cfg.v_target * s;
    y = cfg.height / 2.0 + 15.0 * std::sin(4.0 * M_PI * s);
}

Image8 procedural_clutter(std::uint64_t seed, int width, int height) {
    if (width <= 0 || height <= 0) {
        throw std::invalid_argument("procedural_clutter: size must be positive");
    }
    Image8 img{width, height, std::vector<std::uint8_t>(
                                  static_cast<std::size_t>(width) * height)};

    // Multi-octave value noise, normalized onto [50, 225] so the clutter
    // never reaches the dark range reserved for the stamped blobs.
    struct Octave {
        double spacing;
        double weight;
    };
    const Octave octaves[] = {{64.0, 1.0}, {32.0, 0.5}, {16.0, 0.25}, {8.0, 0.125}};

    std::vector<double> noise(img.pixels.size());
    double lo = 1e300, hi = -1e300;
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            double v = 0.0;
            int oi = 0;
            for (const auto& oc : octaves) {
                int lattice_x = std::max(1, static_cast<int>(std::lround(width / oc.spacing)));
                double sx = static_cast<double>(width) / lattice_x;
                v += oc.weight * octave_noise(seed, oi, lattice_x, sx, oc.spacing, x, y);
                ++oi;
            }
            noise[static_cast<std::size_t>(y) * width + x] = v;
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    double span = hi > lo ? hi - lo : 1.0;
    for (std::size_t i = 0; i < noise.size(); ++i) {
        double v01 = (noise[i] - lo) / span;
        img.pixels[i] = static_cast<std::uint8_t>(std::lround(50.0 + 175.0 * v01));
    }

    // Dark blobs on a jittered grid. The jitter margin keeps every blob at
    // least 2 px away from its cell border, so blobs never touch and each one
    // stays an isolated small-target-like distractor.
    const double cell = 36.0;
    const double r_min = 1.8, r_max = 7.5;
    const double margin = r_max + 2.0;
    int ncx = std::max(1, static_cast<int>(width / cell));
    int ncy = std::max(1, static_cast<int>(height / cell));
    double cw = static_cast<double>(width) / ncx;
    double ch = static_cast<double>(height) / ncy;
    if (cw >= 2.0 * margin + 1.0 && ch >= 2.0 * margin + 1.0) {
        for (int cyi = 0; cyi < ncy; ++cyi) {
            for (int cxi = 0; cxi < ncx; ++cxi) {
                std::uint64_t h = mix(mix(mix(seed, 0xb10bull), static_cast<std::uint64_t>(cxi)),
                                      static_cast<std::uint64_t>(cyi));
                if (unit_double(h) >= 0.75) continue;
                std::uint64_t h1 = splitmix64(h);
                std::uint64_t h2 = splitmix64(h1);
                std::uint64_t h3 = splitmix64(h2);
                std::uint64_t h4 = splitmix64(h3);
                double bx = cxi * cw + margin + unit_double(h1) * (cw - 2.0 * margin);
                double by = cyi * ch + margin + unit_double(h2) * (ch - 2.0 * margin);
                double r = r_min + unit_double(h3) * (r_max - r_min);
                auto lum = static_cast<std::uint8_t>(15 + static_cast<int>(unit_double(h4) * 16.0));
                int ri = static_cast<int>(std::ceil(r));
                for (int dy = -ri; dy <= ri; ++dy) {
                    for (int dx = -ri; dx <= ri; ++dx) {
                        if (dx * dx + dy * dy > r * r) continue;
                        int px = floor_mod(static_cast<long>(std::lround(bx)) + dx, width);
                        int py = static_cast<int>(std::lround(by)) + dy;
                        if (py < 0 || py >= height) continue;
                        img.at(px, py) = lum;
                    }
                }
            }
        }
    }
    return img;
}

namespace {

Image8 build_background(const SceneConfig& cfg) {
    int needed = cfg.width +
                 static_cast<int>(std::ceil(std::abs(cfg.v_background) * cfg.duration_ms / 1000.0)) +
                 1;
    if (cfg.background.empty()) {
        return procedural_clutter(cfg.seed, needed, cfg.height);
    }
    if (cfg.background.rfind("blank:", 0) == 0) {
        double v = std::stod(cfg.background.substr(6));
        if (v < 0.0 || v > 255.0) {
            throw std::invalid_argument("scene: blank background luminance must be in [0,255]");
        }
        Image8 img{needed, cfg.height,
                   std::vector<std::uint8_t>(static_cast<std::size_t>(needed) * cfg.height,
                                             static_cast<std::uint8_t>(std::lround(v)))};
        return img;
    }
    throw std::invalid_argument(
        "scene: file-backed panoramas must be loaded by the caller (use the panorama overload)");
}

}  // namespace

SequenceGenerator::SequenceGenerator(const SceneConfig& cfg) : cfg_(cfg) {
    cfg_.validate();
    panorama_ = build_background(cfg_);
}

SequenceGenerator::SequenceGenerator(const SceneConfig& cfg, Image8 panorama)
    : cfg_(cfg), panorama_(std::move(panorama)) {
    cfg_.validate();
    if (panorama_.height != cfg_.height) {
        throw std::invalid_argument("scene: panorama height must equal frame height");
    }
    if (panorama_.width < cfg_.width) {
        throw std::invalid_argument("scene: panorama narrower than the frame");
    }
    if (!cfg_.wrap) {
        int needed = cfg_.width + static_cast<int>(std::ceil(
                                      std::abs(cfg_.v_background) * cfg_.duration_ms / 1000.0));
        if (panorama_.width < needed) {
            throw std::invalid_argument(
                "scene: panorama too small for the configured drift without wrap");
        }
    }
}

Image8 SequenceGenerator::frame(int index) const {
    if (index < 0 || index >= frame_count()) {
        throw std::invalid_argument("scene: frame index out of range");
    }
    const double t = index * 1000.0 / cfg_.fps;
    const long shift = std::lround(cfg_.v_background * t / 1000.0);

    Image8 out{cfg_.width, cfg_.height,
               std::vector<std::uint8_t>(static_cast<std::size_t>(cfg_.width) * cfg_.height)};
    for (int y = 0; y < cfg_.height; ++y) {
        for (int x = 0; x < cfg_.width; ++x) {
            int px = floor_mod(static_cast<long>(x) - shift, panorama_.width);
            out.at(x, y) = panorama_.at(px, y);
        }
    }

    GroundTruthEntry gt = ground_truth(index);
    if (gt.present) {
        int tw = cfg_.target_w(), th = cfg_.target_h();
        int left = static_cast<int>(std::lround(gt.x)) - (tw - 1) / 2;
        int top = static_cast<int>(std::lround(gt.y)) - (th - 1) / 2;
        auto lum = static_cast<std::uint8_t>(std::lround(cfg_.target_luminance));
        for (int dy = 0; dy < th; ++dy) {
            for (int dx = 0; dx < tw; ++dx) {
                out.at(left + dx, top + dy) = lum;
            }
        }
    }
    return out;
}

GroundTruthEntry SequenceGenerator::ground_truth(int index) const {
    if (index < 0 || index >= frame_count()) {
        throw std::invalid_argument("scene: frame index out of range");
    }
    GroundTruthEntry e;
    e.frame_index = index;
    e.t_ms = index * 1000.0 / cfg_.fps;
    trajectory(e.t_ms, cfg_, e.x, e.y);

    int tw = cfg_.target_w(), th = cfg_.target_h();
    int left = static_cast<int>(std::lround(e.x)) - (tw - 1) / 2;
    int top = static_cast<int>(std::lround(e.y)) - (th - 1) / 2;
    e.present = left >= 0 && top >= 0 && left + tw <= cfg_.width && top + th <= cfg_.height;
    return e;
}

GroundTruthTrack SequenceGenerator::ground_truth_track() const {
    GroundTruthTrack track;
    track.reserve(frame_count());
    for (int i = 0; i < frame_count(); ++i) track.push_back(ground_truth(i));
    return track;
}

Frame SequenceGenerator::frame_as_input(int index) const {
    Image8 img = frame(index);
    Frame f(img.width, img.height);
    for (std::size_t i = 0; i < img.pixels.size(); ++i) f.data()[i] = img.pixels[i];
    return f;
}

std::pair<std::vector<Image8>, GroundTruthTrack> generate_sequence(const SceneConfig& cfg) {
    SequenceGenerator gen(cfg);
    std::vector<Image8> frames;
    frames.reserve(gen.frame_count());
    for (int i = 0; i < gen.frame_count(); ++i) frames.push_back(gen.frame(i));
    return {std::move(frames), gen.ground_truth_track()};
}

}  // namespace stmd::scene

#include "reference_model.hpp"

#include <algorithm>
#include <cmath>

namespace refmodel {
namespace {

double erlang_cdf(int n, double tau, double t) {
    if (t <= 0.0) return 0.0;
    double x = (static_cast<double>(n) / tau) * t;
    double term = 1.0, sum = 1.0;
    for (int j = 1; j <= n; ++j) {
        term *= x / j;
        sum += term;
    }
    return 1.0 - std::exp(-x) * sum;
}

double gamma_pdf(int n, double tau, double t) {
    if (t <= 0.0) return 0.0;
    double logfact = std::lgamma(static_cast<double>(n));  // ln (n-1)!
    return std::exp(n * std::log(n * t) - n * t / tau - logfact - (n + 1) * std::log(tau));
}

double gauss(double sigma, double x, double y) {
    return std::exp(-(x * x + y * y) / (2.0 * sigma * sigma)) / (2.0 * M_PI * sigma * sigma);
}

void unit_sum(std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    for (double& x : v) x /= s;
}

int clampi(int v, int lo, int hi) { return v < lo ? lo : (v > hi ? hi : v); }

stmd::Frame rect_frame(const stmd::Frame& in, bool positive) {
    stmd::Frame out(in.width(), in.height());
    for (std::size_t i = 0; i < in.size(); ++i) {
        double v = in.data()[i];
        out.data()[i] = positive ? (v > 0.0 ? v : 0.0) : (v < 0.0 ? -v : 0.0);
    }
    return out;
}

/// sum_{k<=t, k<len} taps[k] * seq[t-k]; missing history is zero.
stmd::Frame temporal_sum(const std::vector<stmd::Frame>& seq, int t,
                         const std::vector<double>& taps) {
    stmd::Frame out(seq[0].width(), seq[0].height(), 0.0);
    int len = static_cast<int>(taps.size());
    for (int k = 0; k < len && k <= t; ++k) {
        const stmd::Frame& src = seq[t - k];
        for (std::size_t i = 0; i < out.size(); ++i) out.data()[i] += taps[k] * src.data()[i];
    }
    return out;
}

}  // namespace

stmd::Frame conv2d(const stmd::Frame& in, const Kernel2D& k) {
    stmd::Frame out(in.width(), in.height());
    const int r = k.radius;
    for (int y = 0; y < in.height(); ++y) {
        for (int x = 0; x < in.width(); ++x) {
            double acc = 0.0;
            for (int dy = -r; dy <= r; ++dy) {
                for (int dx = -r; dx <= r; ++dx) {
                    int sx = clampi(x - dx, 0, in.width() - 1);
                    int sy = clampi(y - dy, 0, in.height() - 1);
                    acc += k.at(dx, dy) * in.at(sx, sy);
                }
            }
            out.at(x, y) = acc;
        }
    }
    return out;
}

std::vector<double> gamma_taps(int n, double tau, double dt) {
    int len = 1;
    while (erlang_cdf(n, tau, len * dt) < 0.999) ++len;
    std::vector<double> taps(len);
    for (int k = 0; k < len; ++k) taps[k] = gamma_pdf(n, tau, k * dt);
    unit_sum(taps);
    return taps;
}

std::vector<double> exp_taps(double lambda, double dt) {
    int len = 1;
    while (1.0 - std::exp(-len * dt / lambda) < 0.999) ++len;
    std::vector<double> taps(len);
    for (int k = 0; k < len; ++k) taps[k] = std::exp(-k * dt / lambda) / lambda;
    unit_sum(taps);
    return taps;
}

std::vector<double> highpass_taps(const stmd::ModelConfig& cfg) {
    auto fast = gamma_taps(cfg.hp_fast.order_n, cfg.hp_fast.tau_ms, cfg.dt_ms);
    auto slow = gamma_taps(cfg.hp_slow.order_n, cfg.hp_slow.tau_ms, cfg.dt_ms);
    std::vector<double> taps(std::max(fast.size(), slow.size()), 0.0);
    for (std::size_t k = 0; k < fast.size(); ++k) taps[k] += fast[k];
    for (std::size_t k = 0; k < slow.size(); ++k) taps[k] -= slow[k];
    return taps;
}

Kernel2D gaussian2d(double sigma) {
    Kernel2D k;
    k.radius = static_cast<int>(std::ceil(3.0 * sigma));
    int side = 2 * k.radius + 1;
    k.w.resize(static_cast<std::size_t>(side) * side);
    double sum = 0.0;
    for (int dy = -k.radius; dy <= k.radius; ++dy) {
        for (int dx = -k.radius; dx <= k.radius; ++dx) {
            double v = gauss(sigma, dx, dy);
            k.w[static_cast<std::size_t>(dy + k.radius) * side + (dx + k.radius)] = v;
            sum += v;
        }
    }
    for (double& v : k.w) v /= sum;
    return k;
}

namespace {

Kernel2D dog_part(double sigma2, bool positive) {
    double sigma3 = 2.0 * sigma2;
    Kernel2D k;
    k.radius = static_cast<int>(std::ceil(3.0 * sigma3));
    int side = 2 * k.radius + 1;
    k.w.resize(static_cast<std::size_t>(side) * side);
    for (int dy = -k.radius; dy <= k.radius; ++dy) {
        for (int dx = -k.radius; dx <= k.radius; ++dx) {
            double d = gauss(sigma2, dx, dy) - gauss(sigma3, dx, dy);
            double v = positive ? std::max(d, 0.0) : std::min(d, 0.0);
            k.w[static_cast<std::size_t>(dy + k.radius) * side + (dx + k.radius)] = v;
        }
    }
    return k;
}

}  // namespace

Kernel2D dog_pos(double sigma2) { return dog_part(sigma2, true); }
Kernel2D dog_neg(double sigma2) { return dog_part(sigma2, false); }

Kernel2D w2(const stmd::W2Params& p) {
    Kernel2D k;
    k.radius = static_cast<int>(std::ceil(3.0 * std::max(p.sigma4, p.sigma5)));
    int side = 2 * k.radius + 1;
    k.w.resize(static_cast<std::size_t>(side) * side);
    for (int dy = -k.radius; dy <= k.radius; ++dy) {
        for (int dx = -k.radius; dx <= k.radius; ++dx) {
            double g = gauss(p.sigma4, dx, dy) - p.e * gauss(p.sigma5, dx, dy) - p.rho;
            double v = p.gain_pos * std::max(g, 0.0) + p.gain_neg * std::min(g, 0.0);
            k.w[static_cast<std::size_t>(dy + k.radius) * side + (dx + k.radius)] = v;
        }
    }
    return k;
}

Sequences run(const std::vector<stmd::Frame>& inputs, const stmd::ModelConfig& cfg,
              stmd::Variant variant) {
    const int T = static_cast<int>(inputs.size());
    Sequences s;

    Kernel2D retina = gaussian2d(cfg.sigma1);
    auto hp = highpass_taps(cfg);
    Kernel2D wsp = dog_pos(cfg.sigma2);
    Kernel2D wsn = dog_neg(cfg.sigma2);
    auto wtp = exp_taps(cfg.lambda1, cfg.dt_ms);
    auto wtn = exp_taps(cfg.lambda2, cfg.dt_ms);
    Kernel2D w2k = w2(cfg.w2);
    auto gn = gamma_taps(cfg.delay_on.order_n, cfg.delay_on.tau_ms, cfg.dt_ms);
    auto gf = gamma_taps(cfg.delay_off.order_n, cfg.delay_off.tau_ms, cfg.dt_ms);
    auto gl = gamma_taps(cfg.delay_fb.order_n, cfg.delay_fb.tau_ms, cfg.dt_ms);

    for (int t = 0; t < T; ++t) s.P.push_back(conv2d(inputs[t], retina));
    for (int t = 0; t < T; ++t) s.L.push_back(temporal_sum(s.P, t, hp));

    std::vector<stmd::Frame> LP, LN;
    for (int t = 0; t < T; ++t) {
        LP.push_back(conv2d(s.L[t], wsp));
        LN.push_back(conv2d(s.L[t], wsn));
    }
    for (int t = 0; t < T; ++t) {
        stmd::Frame li = temporal_sum(LP, t, wtp);
        stmd::Frame lin = temporal_sum(LN, t, wtn);
        for (std::size_t i = 0; i < li.size(); ++i) li.data()[i] += lin.data()[i];
        s.L_I.push_back(std::move(li));
    }

    for (int t = 0; t < T; ++t) {
        s.S_ON.push_back(rect_frame(s.L_I[t], true));
        s.S_OFF.push_back(rect_frame(s.L_I[t], false));
        s.S_Tm3.push_back(rect_frame(conv2d(s.S_ON[t], w2k), true));
        s.S_Tm2.push_back(rect_frame(conv2d(s.S_OFF[t], w2k), true));
    }
    for (int t = 0; t < T; ++t) {
        s.S_Mi1.push_back(temporal_sum(s.S_Tm3, t, gn));
        s.S_Tm1.push_back(temporal_sum(s.S_Tm2, t, gf));
    }

    for (int t = 0; t < T; ++t) {
        stmd::Frame f(inputs[0].width(), inputs[0].height());
        if (variant == stmd::Variant::estmd) {
            for (std::size_t i = 0; i < f.size(); ++i) {
                f.data()[i] = s.S_Tm3[t].data()[i] * s.S_Tm1[t].data()[i];
            }
        } else {
            // Strictly causal recursion: past outputs only (tap 0 of the
            // Gamma kernel is analytically zero).
            stmd::Frame fb(f.width(), f.height(), 0.0);
            for (int k = 1; k < static_cast<int>(gl.size()) && k <= t; ++k) {
                const stmd::Frame& past = s.F[t - k];
                for (std::size_t i = 0; i < fb.size(); ++i) {
                    fb.data()[i] += gl[k] * past.data()[i];
                }
            }
            for (std::size_t i = 0; i < f.size(); ++i) {
                double kfb = cfg.feedback_gain * fb.data()[i];
                f.data()[i] = (s.S_Tm3[t].data()[i] + kfb) * (s.S_Tm1[t].data()[i] + kfb);
            }
        }
        s.F.push_back(std::move(f));
    }
    return s;
}

stmd::Frame inhibition_w1_3d(const std::vector<stmd::Frame>& L, int t,
                             const stmd::ModelConfig& cfg) {
    Kernel2D wsp = dog_pos(cfg.sigma2);
    Kernel2D wsn = dog_neg(cfg.sigma2);
    auto wtp = exp_taps(cfg.lambda1, cfg.dt_ms);
    auto wtn = exp_taps(cfg.lambda2, cfg.dt_ms);

    const stmd::Frame& cur = L[t];
    stmd::Frame out(cur.width(), cur.height(), 0.0);
    const int r = wsp.radius;  // both parts share the wide-Gaussian radius
    const int smax = static_cast<int>(std::max(wtp.size(), wtn.size()));
    for (int y = 0; y < cur.height(); ++y) {
        for (int x = 0; x < cur.width(); ++x) {
            double acc = 0.0;
            for (int ds = 0; ds < smax && ds <= t; ++ds) {
                double tp = ds < static_cast<int>(wtp.size()) ? wtp[ds] : 0.0;
                double tn = ds < static_cast<int>(wtn.size()) ? wtn[ds] : 0.0;
                const stmd::Frame& src = L[t - ds];
                for (int dy = -r; dy <= r; ++dy) {
                    for (int dx = -r; dx <= r; ++dx) {
                        int sx = clampi(x - dx, 0, cur.width() - 1);
                        int sy = clampi(y - dy, 0, cur.height() - 1);
                        double w1 = wsp.at(dx, dy) * tp + wsn.at(dx, dy) * tn;
                        acc += src.at(sx, sy) * w1;
                    }
                }
            }
            out.at(x, y) = acc;
        }
    }
    return out;
}

}  // namespace refmodel

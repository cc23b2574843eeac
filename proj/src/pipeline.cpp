#include <stmd/pipeline.hpp>

#include <stmd/simd/ops.hpp>

#include <algorithm>
#include <stdexcept>

namespace stmd {
namespace {

// After the feed-forward cascade settles, transients recirculating in the
// feedback loop shrink at least quadratically per delay window for any
// stable gain; two windows flush them to numerical noise.
constexpr int kFeedbackSettleWindows = 2;

DiscreteTemporalKernel shifted_by_one(const DiscreteTemporalKernel& k) {
    if (k.length() < 2) {
        throw std::invalid_argument("feedback delay kernel needs at least two taps");
    }
    std::vector<double> taps(k.taps().begin() + 1, k.taps().end());
    return DiscreteTemporalKernel(std::move(taps), k.dt_ms());
}

}  // namespace

const char* variant_name(Variant v) {
    return v == Variant::estmd ? "estmd" : "feedback";
}

Variant parse_variant(const std::string& name) {
    if (name == "estmd") return Variant::estmd;
    if (name == "feedback") return Variant::feedback;
    throw std::invalid_argument("unknown variant '" + name + "' (expected estmd|feedback)");
}

PipelineKernels build_kernels(const ModelConfig& cfg) {
    cfg.validate();
    PipelineKernels k;
    k.retina = gaussian_kernel({cfg.sigma1});
    k.highpass = highpass_kernel(cfg.hp_fast, cfg.hp_slow, cfg.dt_ms);
    std::tie(k.ws_pos, k.ws_neg) = dog_split(cfg.sigma2);
    k.wt_pos = exp_kernel(cfg.lambda1, cfg.dt_ms);
    k.wt_neg = exp_kernel(cfg.lambda2, cfg.dt_ms);
    k.w2 = w2_kernel(cfg.w2);
    k.delay_on = gamma_kernel(cfg.delay_on, cfg.dt_ms);
    k.delay_off = gamma_kernel(cfg.delay_off, cfg.dt_ms);
    k.delay_fb = gamma_kernel(cfg.delay_fb, cfg.dt_ms);
    return k;
}

// ---------------------------------------------------------------------------
// Stateless layer operations
// ---------------------------------------------------------------------------

Frame retina_blur(const Frame& input, const ModelConfig& cfg) {
    return convolve_spatial(input, gaussian_kernel({cfg.sigma1}));
}

std::pair<Frame, Frame> split_on_off(const Frame& L_I) {
    Frame on(L_I.width(), L_I.height());
    Frame off(L_I.width(), L_I.height());
    simd::active().split_rect(on.data(), off.data(), L_I.data(), L_I.size());
    return {std::move(on), std::move(off)};
}

std::pair<Frame, Frame> medulla_fast(const Frame& S_ON, const Frame& S_OFF,
                                     const ModelConfig& cfg) {
    if (!S_ON.same_shape(S_OFF)) {
        throw std::invalid_argument("medulla_fast: ON/OFF shape mismatch");
    }
    DiscreteSpatialKernel w2 = w2_kernel(cfg.w2);
    Frame tm3 = convolve_spatial(S_ON, w2);
    Frame tm2 = convolve_spatial(S_OFF, w2);
    simd::active().rect(tm3.data(), tm3.data(), tm3.size());
    simd::active().rect(tm2.data(), tm2.data(), tm2.size());
    return {std::move(tm3), std::move(tm2)};
}

Frame lobula_estmd(const Frame& S_Tm3, const Frame& S_Tm1) {
    if (!S_Tm3.same_shape(S_Tm1)) {
        throw std::invalid_argument("lobula_estmd: shape mismatch");
    }
    Frame out(S_Tm3.width(), S_Tm3.height());
    simd::active().mul(out.data(), S_Tm3.data(), S_Tm1.data(), out.size());
    return out;
}

Frame lobula_feedback_product(const Frame& S_Tm3, const Frame& S_Tm1, const Frame& fb,
                              double k) {
    if (!S_Tm3.same_shape(S_Tm1) || !S_Tm3.same_shape(fb)) {
        throw std::invalid_argument("lobula_feedback_product: shape mismatch");
    }
    Frame out(S_Tm3.width(), S_Tm3.height());
    simd::active().feedback_product(out.data(), S_Tm3.data(), S_Tm1.data(), fb.data(), k,
                                    out.size());
    return out;
}

// ---------------------------------------------------------------------------
// LateralInhibitionW1
// ---------------------------------------------------------------------------

LateralInhibitionW1::LateralInhibitionW1(DiscreteSpatialKernel ws_pos,
                                         DiscreteSpatialKernel ws_neg,
                                         DiscreteTemporalKernel wt_pos,
                                         DiscreteTemporalKernel wt_neg, int width, int height)
    : ws_pos_(std::move(ws_pos)),
      ws_neg_(std::move(ws_neg)),
      t_pos_(std::move(wt_pos), width, height),
      t_neg_(std::move(wt_neg), width, height) {}

Frame LateralInhibitionW1::step(const Frame& L) {
    Frame branch_pos = t_pos_.push(convolve_spatial(L, ws_pos_));
    Frame branch_neg = t_neg_.push(convolve_spatial(L, ws_neg_));
    simd::active().axpy(branch_pos.data(), branch_neg.data(), 1.0, branch_pos.size());
    return branch_pos;
}

int LateralInhibitionW1::temporal_length() const {
    return std::max(t_pos_.kernel().length(), t_neg_.kernel().length());
}

void LateralInhibitionW1::reset() {
    t_pos_.reset();
    t_neg_.reset();
}

// ---------------------------------------------------------------------------
// Pipeline
// ---------------------------------------------------------------------------

namespace {

PipelineKernels checked_kernels(const ModelConfig& cfg) {
    PipelineKernels k = build_kernels(cfg);
    // The causal feedback resolution relies on the analytic zero at lag 0.
    if (k.delay_fb.taps()[0] != 0.0) {
        throw std::logic_error("feedback delay kernel must have a zero lag-0 tap");
    }
    return k;
}

}  // namespace

Pipeline::Pipeline(const ModelConfig& cfg, Variant variant, int width, int height)
    : Pipeline(cfg, variant, width, height, checked_kernels(cfg)) {}

Pipeline::Pipeline(const ModelConfig& cfg, Variant variant, int width, int height,
                   PipelineKernels k)
    : cfg_(cfg),
      variant_(variant),
      width_(width),
      height_(height),
      retina_(std::move(k.retina)),
      w2_(std::move(k.w2)),
      highpass_(std::move(k.highpass), width, height),
      inhibit_(std::move(k.ws_pos), std::move(k.ws_neg), std::move(k.wt_pos),
               std::move(k.wt_neg), width, height),
      delay_on_(std::move(k.delay_on), width, height),
      delay_off_(std::move(k.delay_off), width, height),
      feedback_delay_(shifted_by_one(k.delay_fb), width, height),
      feedback_(width, height, 0.0) {
    long base = (highpass_.kernel().length() - 1) + (inhibit_.temporal_length() - 1) +
                (std::max(delay_on_.kernel().length(), delay_off_.kernel().length()) - 1);
    warmup_ = base;
    if (variant_ == Variant::feedback) {
        warmup_ += static_cast<long>(kFeedbackSettleWindows) * (k.delay_fb.length() - 1);
    }
}

LayerTap Pipeline::step(const Frame& input) {
    if (input.width() != width_ || input.height() != height_) {
        throw std::invalid_argument("Pipeline::step: frame shape changed mid-stream");
    }

    LayerTap tap;
    tap.P = convolve_spatial(input, retina_);
    tap.L = highpass_.push(tap.P);
    tap.L_I = inhibit_.step(tap.L);
    std::tie(tap.S_ON, tap.S_OFF) = split_on_off(tap.L_I);

    tap.S_Tm3 = convolve_spatial(tap.S_ON, w2_);
    tap.S_Tm2 = convolve_spatial(tap.S_OFF, w2_);
    simd::active().rect(tap.S_Tm3.data(), tap.S_Tm3.data(), tap.S_Tm3.size());
    simd::active().rect(tap.S_Tm2.data(), tap.S_Tm2.data(), tap.S_Tm2.size());

    tap.S_Mi1 = delay_on_.push(tap.S_Tm3);
    tap.S_Tm1 = delay_off_.push(tap.S_Tm2);

    if (variant_ == Variant::feedback) {
        tap.F = lobula_feedback_product(tap.S_Tm3, tap.S_Tm1, feedback_, cfg_.feedback_gain);
        feedback_ = feedback_delay_.push(tap.F);
    } else {
        tap.F = lobula_estmd(tap.S_Tm3, tap.S_Tm1);
    }

    tap.frame_index = t_;
    tap.warmup = t_ < warmup_;
    ++t_;
    return tap;
}

}  // namespace stmd

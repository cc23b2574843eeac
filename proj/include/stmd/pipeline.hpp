/**
 * @file pipeline.hpp
 * @brief The four-layer detection pipeline (retina, lamina, medulla, lobula)
 *        as a causal streaming processor.
 *
 * Two variants share everything up to the lobula: the baseline model
 * multiplies the ON stream with the delayed OFF stream; the feedback variant
 * adds a temporally delayed copy of its own past output to both factors
 * before multiplying. The feedback recursion is resolved strictly causally:
 * the Gamma delay kernel has a zero lag-0 tap, so the current output never
 * depends on itself.
 */
#pragma once

#include <stmd/convolve.hpp>
#include <stmd/frame.hpp>
#include <stmd/kernels.hpp>
#include <stmd/model_config.hpp>

#include <string>
#include <utility>

namespace stmd {

enum class Variant { estmd, feedback };

const char* variant_name(Variant v);
Variant parse_variant(const std::string& name);

/// All intermediate frames of one step, so every stage is independently
/// observable.
struct LayerTap {
    Frame P;       ///< retina blur
    Frame L;       ///< lamina high-pass
    Frame L_I;     ///< after first-order lateral inhibition
    Frame S_ON;    ///< rectified positive part of L_I
    Frame S_OFF;   ///< rectified negative part of L_I
    Frame S_Tm3;   ///< ON after second-order inhibition
    Frame S_Tm2;   ///< OFF after second-order inhibition
    Frame S_Mi1;   ///< delayed ON
    Frame S_Tm1;   ///< delayed OFF
    Frame F;       ///< model output
    long frame_index = 0;
    bool warmup = true;  ///< output still depends on the zero-initialized history
};

/// Every discretized kernel the pipeline needs, built from one config.
struct PipelineKernels {
    DiscreteSpatialKernel retina;
    DiscreteTemporalKernel highpass;
    DiscreteSpatialKernel ws_pos, ws_neg;    ///< rectified DoG split
    DiscreteTemporalKernel wt_pos, wt_neg;   ///< exponential temporal pair
    DiscreteSpatialKernel w2;
    DiscreteTemporalKernel delay_on, delay_off;
    DiscreteTemporalKernel delay_fb;
};

PipelineKernels build_kernels(const ModelConfig& cfg);

// --- Stateless layer operations -------------------------------------------

/// P = input (*) G_sigma1.
Frame retina_blur(const Frame& input, const ModelConfig& cfg);

/// S_ON = max(L_I, 0), S_OFF = -min(L_I, 0), pointwise.
std::pair<Frame, Frame> split_on_off(const Frame& L_I);

/// S_Tm3 = [S_ON (*) W2]^+, S_Tm2 = [S_OFF (*) W2]^+.
std::pair<Frame, Frame> medulla_fast(const Frame& S_ON, const Frame& S_OFF,
                                     const ModelConfig& cfg);

/// F = S_Tm3 . S_Tm1 pointwise.
Frame lobula_estmd(const Frame& S_Tm3, const Frame& S_Tm1);

/// F = (S_Tm3 + k*fb) . (S_Tm1 + k*fb) pointwise.
Frame lobula_feedback_product(const Frame& S_Tm3, const Frame& S_Tm1, const Frame& fb,
                              double k);

// --- Stateful stages --------------------------------------------------------

/// First-order lateral inhibition: the separable two-branch structure is
/// exploited, spatial convolution per frame then temporal convolution per
/// branch, then sum.
class LateralInhibitionW1 {
public:
    LateralInhibitionW1(DiscreteSpatialKernel ws_pos, DiscreteSpatialKernel ws_neg,
                        DiscreteTemporalKernel wt_pos, DiscreteTemporalKernel wt_neg,
                        int width, int height);

    Frame step(const Frame& L);

    int temporal_length() const;
    void reset();

private:
    DiscreteSpatialKernel ws_pos_, ws_neg_;
    TemporalConvolver t_pos_, t_neg_;
};

// --- Whole pipeline ----------------------------------------------------------

class Pipeline {
public:
    Pipeline(const ModelConfig& cfg, Variant variant, int width, int height);

    /// Processes the next frame; frames must arrive in time order with a
    /// constant shape. Throws on a shape change mid-stream.
    LayerTap step(const Frame& input);

    /// Frames before this index depend on the cold-start history: the sum of
    /// the per-stage kernel horizons, plus settle windows of the feedback
    /// loop for the feedback variant.
    long warmup_frames() const { return warmup_; }

    long frames_processed() const { return t_; }
    Variant variant() const { return variant_; }
    const ModelConfig& config() const { return cfg_; }
    int width() const { return width_; }
    int height() const { return height_; }

private:
    Pipeline(const ModelConfig& cfg, Variant variant, int width, int height, PipelineKernels k);

    ModelConfig cfg_;
    Variant variant_;
    int width_, height_;

    DiscreteSpatialKernel retina_, w2_;
    TemporalConvolver highpass_;
    LateralInhibitionW1 inhibit_;
    TemporalConvolver delay_on_, delay_off_;
    TemporalConvolver feedback_delay_;  ///< Gamma_fb taps shifted by one lag
    Frame feedback_;                    ///< delayed-output signal for the current step

    long t_ = 0;
    long warmup_ = 0;
};

}  // namespace stmd

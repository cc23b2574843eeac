/**
 * @file model_config.hpp
 * @brief Every free parameter of the detection model in one validated record.
 */
#pragma once

#include <stmd/kernels.hpp>

namespace stmd {

/// Model parameters. Defaults are working values in the ranges the STMD
/// modeling literature uses; they are configuration, not ground truth.
struct ModelConfig {
    // Retina: ommatidium blur.
    double sigma1 = 1.25;  ///< pixels

    // Lamina: temporal high-pass H = Gamma_fast - Gamma_slow. The step
    // response peaks a few ms after a luminance change; at hundreds of px/s
    // that latency converts directly into localization lag, so the defaults
    // are fast.
    GammaSpec hp_fast{2, 1.0};
    GammaSpec hp_slow{6, 3.0};

    // Lamina: first-order lateral inhibition. The spatial pair is the
    // rectified split of DoG(sigma2, 2*sigma2); the temporal pair is a fast
    // and a slow exponential (lambda2 > lambda1).
    double sigma2 = 1.5;    ///< pixels
    double lambda1 = 1.0;   ///< ms, positive branch
    double lambda2 = 3.0;   ///< ms, negative branch

    // Medulla: second-order lateral inhibition.
    W2Params w2;

    // Medulla: Gamma delays of the ON (Mi1) and OFF (Tm1) streams. The delay
    // sets the preferred dwell time, i.e. target-size/velocity tuning:
    // 8 ms matches a 5 px target near 500 px/s.
    GammaSpec delay_on{5, 8.0};
    GammaSpec delay_off{5, 8.0};

    // Lobula feedback loop: delay kernel and gain applied to past output.
    GammaSpec delay_fb{5, 8.0};
    double feedback_gain = 0.02;  ///< k; stable at 8-bit luminance scale

    double dt_ms = 1.0;  ///< frame period (1000 Hz default)

    double sigma3() const { return 2.0 * sigma2; }

    /// Throws std::invalid_argument when any invariant is violated
    /// (positivity, lambda2 > lambda1, finite gain).
    void validate() const;
};

}  // namespace stmd

/**
 * @file reference_model.hpp
 * @brief Definition-level oracle for the whole pipeline.
 *
 * Everything here is written from the model definitions directly: naive
 * clamped-index convolutions, whole-sequence temporal sums over the full
 * history, and its own kernel sampling (same documented discretization rules,
 * independent code). It shares no computation path with the streaming
 * implementation it checks.
 */
#pragma once

#include <stmd/frame.hpp>
#include <stmd/model_config.hpp>
#include <stmd/pipeline.hpp>

#include <vector>

namespace refmodel {

/// Square kernel as a flat (2r+1)^2 grid.
struct Kernel2D {
    int radius = 0;
    std::vector<double> w;

    double at(int dx, int dy) const {
        return w[static_cast<std::size_t>(dy + radius) * (2 * radius + 1) + (dx + radius)];
    }
};

/// True 2-D convolution with replicate-edge clamping:
///   out(x,y) = sum_{dx,dy} k(dx,dy) * in(clamp(x-dx), clamp(y-dy))
stmd::Frame conv2d(const stmd::Frame& in, const Kernel2D& k);

// Independent kernel discretization (sample at k*dt, truncate at 0.999
// cumulative mass, unit-sum normalize where the model normalizes).
std::vector<double> gamma_taps(int n, double tau, double dt);
std::vector<double> exp_taps(double lambda, double dt);
std::vector<double> highpass_taps(const stmd::ModelConfig& cfg);
Kernel2D gaussian2d(double sigma);
Kernel2D dog_pos(double sigma2);
Kernel2D dog_neg(double sigma2);
Kernel2D w2(const stmd::W2Params& p);

/// All intermediate sequences of the definition-level evaluation.
struct Sequences {
    std::vector<stmd::Frame> P, L, L_I, S_ON, S_OFF, S_Tm3, S_Tm2, S_Mi1, S_Tm1, F;
};

/// Evaluates the whole model over a finite sequence, whole-history sums at
/// every step (no ring buffers, no streaming state).
Sequences run(const std::vector<stmd::Frame>& inputs, const stmd::ModelConfig& cfg,
              stmd::Variant variant);

/// The unseparated triple-sum form of the first-order inhibition:
///   L_I(x,y,t) = sum_{dx,dy,ds} L(x-dx, y-dy, t-ds) * W1(dx,dy,ds)
/// with W1(dx,dy,ds) = WSP(dx,dy)*WTP[ds] + WSN(dx,dy)*WTN[ds].
stmd::Frame inhibition_w1_3d(const std::vector<stmd::Frame>& L, int t,
                             const stmd::ModelConfig& cfg);

}  // namespace refmodel

/**
 * @file kernels.hpp
 * @brief Construction and discretization of the model's convolution kernels.
 *
 * Temporal kernels are sampled at tap centers t = k*dt, truncated at the
 * first horizon where the continuous kernel's cumulative mass reaches 0.999,
 * and rescaled to unit tap sum so the discrete DC gain matches the continuous
 * integral. Spatial Gaussians are sampled on radius ceil(3*sigma) and
 * rescaled to unit sum. The rectified difference-of-Gaussians pair and the
 * second-order inhibition kernel are left unnormalized: their shape, not
 * their gain, carries the inhibition semantics.
 */
#pragma once

#include <utility>
#include <vector>

namespace stmd {

/// Gamma kernel parameters: Gamma_{n,tau}(t) = (n t)^n exp(-n t / tau) / ((n-1)! tau^(n+1)).
/// Unimodal, causal, peaks at t = tau, integrates to 1 over [0, inf).
struct GammaSpec {
    int order_n = 1;      ///< n >= 1, dimensionless
    double tau_ms = 1.0;  ///< tau > 0, milliseconds

    bool operator==(const GammaSpec&) const = default;
};

/// Isotropic Gaussian G_sigma(x,y) = exp(-(x^2+y^2)/(2 sigma^2)) / (2 pi sigma^2).
struct GaussianSpec {
    double sigma_px = 1.0;  ///< sigma > 0, pixels
};

/// Parameters of the second-order lateral inhibition kernel
/// W2 = A*[g]^+ + B*[g]^- with g = G_sigma4 - e*G_sigma5 - rho.
struct W2Params {
    double gain_pos = 1.0;   ///< A
    double gain_neg = 3.0;   ///< B
    double e = 1.0;          ///< wide-Gaussian scale
    double rho = 0.0;        ///< offset
    double sigma4 = 1.5;     ///< pixels
    double sigma5 = 3.0;     ///< pixels
};

/// Sampled causal temporal kernel. Tap k applies to the sample k frames in
/// the past; length equals the 0.999-mass truncation horizon / dt.
class DiscreteTemporalKernel {
public:
    DiscreteTemporalKernel() = default;
    DiscreteTemporalKernel(std::vector<double> taps, double dt_ms);

    const std::vector<double>& taps() const { return taps_; }
    double dt_ms() const { return dt_; }
    int length() const { return static_cast<int>(taps_.size()); }

    double tap_sum() const;
    /// Index of the largest tap (first one on ties).
    int argmax_tap() const;

private:
    std::vector<double> taps_;
    double dt_ = 1.0;
};

/// Square spatial kernel on a (2*radius+1)^2 grid, weight(dx,dy) for
/// dx,dy in [-radius, radius].
class DiscreteSpatialKernel {
public:
    DiscreteSpatialKernel() = default;
    DiscreteSpatialKernel(int radius, std::vector<double> weights);

    int radius() const { return radius_; }
    int side() const { return 2 * radius_ + 1; }
    const std::vector<double>& weights() const { return weights_; }

    double at(int dx, int dy) const {
        return weights_[static_cast<std::size_t>(dy + radius_) * side() + (dx + radius_)];
    }
    double& at(int dx, int dy) {
        return weights_[static_cast<std::size_t>(dy + radius_) * side() + (dx + radius_)];
    }

    double weight_sum() const;

    /// Smallest centered square holding every nonzero weight. Dropping the
    /// exactly-zero border rings changes no convolution result.
    DiscreteSpatialKernel cropped() const;

private:
    int radius_ = 0;
    std::vector<double> weights_{1.0};
};

/// Continuous Gamma kernel value at time t (>= 0).
double gamma_value(const GammaSpec& spec, double t_ms);

/// Cumulative mass of the continuous Gamma kernel over [0, t] (Erlang CDF,
/// shape n+1, rate n/tau).
double gamma_mass(const GammaSpec& spec, double t_ms);

/// Continuous Gaussian value at offset (x, y).
double gaussian_value(double sigma, double x, double y);

/// Samples Gamma_{n,tau} at t = k*dt, truncates at 0.999 mass, rescales to
/// unit tap sum. tap[0] is exactly zero for any n >= 1.
DiscreteTemporalKernel gamma_kernel(const GammaSpec& spec, double dt_ms);

/// Temporal high-pass H = Gamma_{g1} - Gamma_{g2}, zero-padded to the longer
/// horizon. Tap sum is zero (both components are unit-sum). Identical specs
/// yield a degenerate all-zero kernel.
DiscreteTemporalKernel highpass_kernel(const GammaSpec& g1, const GammaSpec& g2, double dt_ms);

/// Samples (1/lambda) exp(-t/lambda) at t = k*dt, truncates at 0.999 mass,
/// rescales to unit tap sum.
DiscreteTemporalKernel exp_kernel(double lambda_ms, double dt_ms);

/// Unit-sum sampled Gaussian on radius ceil(3*sigma).
DiscreteSpatialKernel gaussian_kernel(const GaussianSpec& spec);

/// Rectified split of the difference-of-Gaussians G_sigma2 - G_{2*sigma2}:
/// first = positive part, second = negative part, both unnormalized on the
/// radius of the wider Gaussian. first + second reassembles the raw DoG.
std::pair<DiscreteSpatialKernel, DiscreteSpatialKernel> dog_split(double sigma2);

/// Second-order lateral inhibition kernel W2 = A*[g]^+ + B*[g]^- sampled on
/// radius ceil(3*max(sigma4, sigma5)); unnormalized.
DiscreteSpatialKernel w2_kernel(const W2Params& p);

}  // namespace stmd

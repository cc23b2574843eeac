#include <stmd/kernels.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace stmd {
namespace {

constexpr double kTruncationMass = 0.999;

void check_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw std::invalid_argument(std::string(name) + " must be positive and finite");
    }
}

double rect_pos(double v) { return v > 0.0 ? v : 0.0; }
double rect_neg(double v) { return v < 0.0 ? v : 0.0; }

}  // namespace

// ---------------------------------------------------------------------------
// DiscreteTemporalKernel / DiscreteSpatialKernel
// ---------------------------------------------------------------------------

DiscreteTemporalKernel::DiscreteTemporalKernel(std::vector<double> taps, double dt_ms)
    : taps_(std::move(taps)), dt_(dt_ms) {
    if (taps_.empty()) throw std::invalid_argument("temporal kernel: empty tap list");
    check_positive(dt_, "dt");
    for (double t : taps_) {
        if (!std::isfinite(t)) throw std::invalid_argument("temporal kernel: non-finite tap");
    }
}

double DiscreteTemporalKernel::tap_sum() const {
    double s = 0.0;
    for (double t : taps_) s += t;
    return s;
}

int DiscreteTemporalKernel::argmax_tap() const {
    int best = 0;
    for (int k = 1; k < length(); ++k) {
        if (taps_[k] > taps_[best]) best = k;
    }
    return best;
}

DiscreteSpatialKernel::DiscreteSpatialKernel(int radius, std::vector<double> weights)
    : radius_(radius), weights_(std::move(weights)) {
    if (radius_ < 0) throw std::invalid_argument("spatial kernel: negative radius");
    std::size_t expected = static_cast<std::size_t>(side()) * side();
    if (weights_.size() != expected) {
        throw std::invalid_argument("spatial kernel: weight count does not match radius");
    }
    for (double w : weights_) {
        if (!std::isfinite(w)) throw std::invalid_argument("spatial kernel: non-finite weight");
    }
}

double DiscreteSpatialKernel::weight_sum() const {
    double s = 0.0;
    for (double w : weights_) s += w;
    return s;
}

DiscreteSpatialKernel DiscreteSpatialKernel::cropped() const {
    int r = radius_;
    auto ring_is_zero = [&](int ring) {
        for (int d = -ring; d <= ring; ++d) {
            if (at(d, -ring) != 0.0 || at(d, ring) != 0.0) return false;
            if (at(-ring, d) != 0.0 || at(ring, d) != 0.0) return false;
        }
        return true;
    };
    while (r > 0 && ring_is_zero(r)) --r;
    if (r == radius_) return *this;
    std::vector<double> w(static_cast<std::size_t>(2 * r + 1) * (2 * r + 1));
    DiscreteSpatialKernel out(r, std::move(w));
    for (int dy = -r; dy <= r; ++dy) {
        for (int dx = -r; dx <= r; ++dx) {
            out.at(dx, dy) = at(dx, dy);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Continuous kernel evaluation
// ---------------------------------------------------------------------------

double gamma_value(const GammaSpec& spec, double t_ms) {
    if (spec.order_n < 1) throw std::invalid_argument("gamma kernel: order must be >= 1");
    check_positive(spec.tau_ms, "tau");
    if (t_ms <= 0.0) return 0.0;
    // (n t)^n exp(-n t / tau) / ((n-1)! tau^(n+1)), evaluated in log space so
    // large n*t cannot overflow the power term.
    const double n = spec.order_n;
    const double tau = spec.tau_ms;
    const double log_v =
        n * std::log(n * t_ms) - n * t_ms / tau - std::lgamma(n) - (n + 1.0) * std::log(tau);
    return std::exp(log_v);
}

double gamma_mass(const GammaSpec& spec, double t_ms) {
    if (spec.order_n < 1) throw std::invalid_argument("gamma kernel: order must be >= 1");
    check_positive(spec.tau_ms, "tau");
    if (t_ms <= 0.0) return 0.0;
    // Erlang CDF with shape n+1 and rate n/tau:
    // 1 - exp(-x) * sum_{j=0}^{n} x^j / j!, x = (n/tau) * t
    const int n = spec.order_n;
    const double x = (static_cast<double>(n) / spec.tau_ms) * t_ms;
    double term = 1.0;
    double sum = 1.0;
    for (int j = 1; j <= n; ++j) {
        term *= x / j;
        sum += term;
    }
    return 1.0 - std::exp(-x) * sum;
}

double gaussian_value(double sigma, double x, double y) {
    check_positive(sigma, "sigma");
    const double s2 = sigma * sigma;
    return std::exp(-(x * x + y * y) / (2.0 * s2)) / (2.0 * M_PI * s2);
}

// ---------------------------------------------------------------------------
// Temporal kernel factories
// ---------------------------------------------------------------------------

namespace {

/// Smallest m >= 1 with mass(m*dt) >= 0.999; taps live at k*dt, k in [0, m).
template <typename MassFn>
int truncation_length(double dt_ms, MassFn mass) {
    int m = 1;
    while (mass(m * dt_ms) < kTruncationMass) {
        ++m;
        if (m > 1000000) {
            throw std::invalid_argument("temporal kernel: truncation horizon exceeds 1e6 taps");
        }
    }
    return m;
}

void normalize_to_unit_sum(std::vector<double>& taps) {
    double s = 0.0;
    for (double t : taps) s += t;
    if (s <= 0.0) throw std::invalid_argument("temporal kernel: non-positive tap sum");
    for (double& t : taps) t /= s;
}

}  // namespace

DiscreteTemporalKernel gamma_kernel(const GammaSpec& spec, double dt_ms) {
    check_positive(dt_ms, "dt");
    if (spec.order_n < 1) throw std::invalid_argument("gamma kernel: order must be >= 1");
    check_positive(spec.tau_ms, "tau");
    int len = truncation_length(dt_ms, [&](double t) { return gamma_mass(spec, t); });
    std::vector<double> taps(len);
    for (int k = 0; k < len; ++k) taps[k] = gamma_value(spec, k * dt_ms);
    normalize_to_unit_sum(taps);
    return DiscreteTemporalKernel(std::move(taps), dt_ms);
}

DiscreteTemporalKernel highpass_kernel(const GammaSpec& g1, const GammaSpec& g2, double dt_ms) {
    DiscreteTemporalKernel k1 = gamma_kernel(g1, dt_ms);
    DiscreteTemporalKernel k2 = gamma_kernel(g2, dt_ms);
    int len = std::max(k1.length(), k2.length());
    std::vector<double> taps(len, 0.0);
    for (int k = 0; k < k1.length(); ++k) taps[k] += k1.taps()[k];
    for (int k = 0; k < k2.length(); ++k) taps[k] -= k2.taps()[k];
    if (g1 == g2) {
        // Degenerate but representable: both components cancel exactly.
        std::fill(taps.begin(), taps.end(), 0.0);
    }
    return DiscreteTemporalKernel(std::move(taps), dt_ms);
}

DiscreteTemporalKernel exp_kernel(double lambda_ms, double dt_ms) {
    check_positive(lambda_ms, "lambda");
    check_positive(dt_ms, "dt");
    int len = truncation_length(dt_ms,
                                [&](double t) { return 1.0 - std::exp(-t / lambda_ms); });
    std::vector<double> taps(len);
    for (int k = 0; k < len; ++k) taps[k] = std::exp(-k * dt_ms / lambda_ms) / lambda_ms;
    normalize_to_unit_sum(taps);
    return DiscreteTemporalKernel(std::move(taps), dt_ms);
}

// ---------------------------------------------------------------------------
// Spatial kernel factories
// ---------------------------------------------------------------------------

DiscreteSpatialKernel gaussian_kernel(const GaussianSpec& spec) {
    check_positive(spec.sigma_px, "sigma");
    int radius = static_cast<int>(std::ceil(3.0 * spec.sigma_px));
    std::vector<double> w(static_cast<std::size_t>(2 * radius + 1) * (2 * radius + 1));
    DiscreteSpatialKernel out(radius, std::move(w));
    double sum = 0.0;
    for (int dy = -radius; dy <= radius; ++dy) {
        for (int dx = -radius; dx <= radius; ++dx) {
            double v = gaussian_value(spec.sigma_px, dx, dy);
            out.at(dx, dy) = v;
            sum += v;
        }
    }
    std::vector<double> normalized = out.weights();
    for (double& v : normalized) v /= sum;
    return DiscreteSpatialKernel(radius, std::move(normalized));
}

std::pair<DiscreteSpatialKernel, DiscreteSpatialKernel> dog_split(double sigma2) {
    check_positive(sigma2, "sigma2");
    const double sigma3 = 2.0 * sigma2;
    int radius = static_cast<int>(std::ceil(3.0 * sigma3));
    std::size_t count = static_cast<std::size_t>(2 * radius + 1) * (2 * radius + 1);
    DiscreteSpatialKernel pos(radius, std::vector<double>(count));
    DiscreteSpatialKernel neg(radius, std::vector<double>(count));
    for (int dy = -radius; dy <= radius; ++dy) {
        for (int dx = -radius; dx <= radius; ++dx) {
            double d = gaussian_value(sigma2, dx, dy) - gaussian_value(sigma3, dx, dy);
            pos.at(dx, dy) = rect_pos(d);
            neg.at(dx, dy) = rect_neg(d);
        }
    }
    return {std::move(pos), std::move(neg)};
}

DiscreteSpatialKernel w2_kernel(const W2Params& p) {
    check_positive(p.sigma4, "sigma4");
    check_positive(p.sigma5, "sigma5");
    int radius = static_cast<int>(std::ceil(3.0 * std::max(p.sigma4, p.sigma5)));
    std::size_t count = static_cast<std::size_t>(2 * radius + 1) * (2 * radius + 1);
    DiscreteSpatialKernel out(radius, std::vector<double>(count));
    for (int dy = -radius; dy <= radius; ++dy) {
        for (int dx = -radius; dx <= radius; ++dx) {
            double g = gaussian_value(p.sigma4, dx, dy) - p.e * gaussian_value(p.sigma5, dx, dy) -
                       p.rho;
            out.at(dx, dy) = p.gain_pos * rect_pos(g) + p.gain_neg * rect_neg(g);
        }
    }
    return out;
}

}  // namespace stmd

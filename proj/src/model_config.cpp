#include <stmd/model_config.hpp>

#include <cmath>
#include <stdexcept>

namespace stmd {
namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

void check_gamma(const GammaSpec& g, const char* what) {
    if (g.order_n < 1 || !(g.tau_ms > 0.0) || !std::isfinite(g.tau_ms)) {
        throw std::invalid_argument(std::string("ModelConfig: invalid gamma spec for ") + what);
    }
}

}  // namespace

void ModelConfig::validate() const {
    require(sigma1 > 0.0 && std::isfinite(sigma1), "ModelConfig: sigma1 must be positive");
    require(sigma2 > 0.0 && std::isfinite(sigma2), "ModelConfig: sigma2 must be positive");
    require(w2.sigma4 > 0.0 && std::isfinite(w2.sigma4), "ModelConfig: sigma4 must be positive");
    require(w2.sigma5 > 0.0 && std::isfinite(w2.sigma5), "ModelConfig: sigma5 must be positive");
    require(lambda1 > 0.0 && std::isfinite(lambda1), "ModelConfig: lambda1 must be positive");
    require(lambda2 > 0.0 && std::isfinite(lambda2), "ModelConfig: lambda2 must be positive");
    require(lambda2 > lambda1, "ModelConfig: lambda2 must exceed lambda1");
    require(dt_ms > 0.0 && std::isfinite(dt_ms), "ModelConfig: dt must be positive");
    require(std::isfinite(feedback_gain), "ModelConfig: feedback gain must be finite");
    require(std::isfinite(w2.gain_pos) && std::isfinite(w2.gain_neg) && std::isfinite(w2.e) &&
                std::isfinite(w2.rho),
            "ModelConfig: W2 gains must be finite");
    check_gamma(hp_fast, "hp_fast");
    check_gamma(hp_slow, "hp_slow");
    check_gamma(delay_on, "delay_on");
    check_gamma(delay_off, "delay_off");
    check_gamma(delay_fb, "delay_fb");
}

}  // namespace stmd

#include <stmd/io/settings.hpp>

namespace stmd::io {

scene::SceneConfig scene_from_config(const ConfigFile& cfg) {
    scene::SceneConfig sc;
    sc.width = cfg.get_int("scene", "width", sc.width);
    sc.height = cfg.get_int("scene", "height", sc.height);
    sc.fps = cfg.get_double("scene", "fps", sc.fps);
    sc.duration_ms = cfg.get_double("scene", "duration_ms", sc.duration_ms);
    sc.background = cfg.get_or("scene", "background", sc.background);
    sc.seed = static_cast<std::uint64_t>(cfg.get_long("scene", "seed", static_cast<long>(sc.seed)));
    sc.v_background = cfg.get_double("scene", "background_velocity", sc.v_background);
    sc.v_target = cfg.get_double("scene", "target_velocity", sc.v_target);
    sc.target_size = cfg.get_int("scene", "target_size", sc.target_size);
    sc.target_width = cfg.get_int("scene", "target_width", sc.target_width);
    sc.target_height = cfg.get_int("scene", "target_height", sc.target_height);
    sc.target_luminance = cfg.get_double("scene", "target_luminance", sc.target_luminance);
    sc.t_offset_ms = cfg.get_double("scene", "t_offset_ms", sc.t_offset_ms);
    sc.wrap = cfg.get_bool("scene", "wrap", sc.wrap);
    return sc;
}

ModelConfig model_from_config(const ConfigFile& cfg) {
    ModelConfig mc;
    mc.sigma1 = cfg.get_double("model", "sigma1", mc.sigma1);
    mc.hp_fast.order_n = cfg.get_int("model", "hp_fast_n", mc.hp_fast.order_n);
    mc.hp_fast.tau_ms = cfg.get_double("model", "hp_fast_tau", mc.hp_fast.tau_ms);
    mc.hp_slow.order_n = cfg.get_int("model", "hp_slow_n", mc.hp_slow.order_n);
    mc.hp_slow.tau_ms = cfg.get_double("model", "hp_slow_tau", mc.hp_slow.tau_ms);
    mc.sigma2 = cfg.get_double("model", "sigma2", mc.sigma2);
    mc.lambda1 = cfg.get_double("model", "lambda1", mc.lambda1);
    mc.lambda2 = cfg.get_double("model", "lambda2", mc.lambda2);
    mc.w2.gain_pos = cfg.get_double("model", "w2_a", mc.w2.gain_pos);
    mc.w2.gain_neg = cfg.get_double("model", "w2_b", mc.w2.gain_neg);
    mc.w2.e = cfg.get_double("model", "w2_e", mc.w2.e);
    mc.w2.rho = cfg.get_double("model", "w2_rho", mc.w2.rho);
    mc.w2.sigma4 = cfg.get_double("model", "sigma4", mc.w2.sigma4);
    mc.w2.sigma5 = cfg.get_double("model", "sigma5", mc.w2.sigma5);
    mc.delay_on.order_n = cfg.get_int("model", "delay_on_n", mc.delay_on.order_n);
    mc.delay_on.tau_ms = cfg.get_double("model", "delay_on_tau", mc.delay_on.tau_ms);
    mc.delay_off.order_n = cfg.get_int("model", "delay_off_n", mc.delay_off.order_n);
    mc.delay_off.tau_ms = cfg.get_double("model", "delay_off_tau", mc.delay_off.tau_ms);
    mc.delay_fb.order_n = cfg.get_int("model", "feedback_n", mc.delay_fb.order_n);
    mc.delay_fb.tau_ms = cfg.get_double("model", "feedback_tau", mc.delay_fb.tau_ms);
    mc.feedback_gain = cfg.get_double("model", "feedback_gain", mc.feedback_gain);
    mc.dt_ms = cfg.get_double("model", "dt_ms", mc.dt_ms);
    mc.validate();
    return mc;
}

EvalConfig eval_from_config(const ConfigFile& cfg) {
    EvalConfig ec;
    ec.gamma = cfg.get_double("eval", "gamma", ec.gamma);
    ec.fa_target = cfg.get_double("eval", "fa_target", ec.fa_target);
    ec.match_radius = cfg.get_double("eval", "match_radius", ec.match_radius);
    ec.roc_points = cfg.get_int("eval", "roc_points", ec.roc_points);
    return ec;
}

void snapshot_scene(ConfigFile& out, const scene::SceneConfig& sc) {
    out.set_long("scene", "width", sc.width);
    out.set_long("scene", "height", sc.height);
    out.set_double("scene", "fps", sc.fps);
    out.set_double("scene", "duration_ms", sc.duration_ms);
    out.set("scene", "background", sc.background);
    out.set_long("scene", "seed", static_cast<long>(sc.seed));
    out.set_double("scene", "background_velocity", sc.v_background);
    out.set_double("scene", "target_velocity", sc.v_target);
    out.set_long("scene", "target_size", sc.target_size);
    out.set_long("scene", "target_width", sc.target_width);
    out.set_long("scene", "target_height", sc.target_height);
    out.set_double("scene", "target_luminance", sc.target_luminance);
    out.set_double("scene", "t_offset_ms", sc.t_offset_ms);
    out.set("scene", "wrap", sc.wrap ? "true" : "false");
}

void snapshot_model(ConfigFile& out, const ModelConfig& mc) {
    out.set_double("model", "sigma1", mc.sigma1);
    out.set_long("model", "hp_fast_n", mc.hp_fast.order_n);
    out.set_double("model", "hp_fast_tau", mc.hp_fast.tau_ms);
    out.set_long("model", "hp_slow_n", mc.hp_slow.order_n);
    out.set_double("model", "hp_slow_tau", mc.hp_slow.tau_ms);
    out.set_double("model", "sigma2", mc.sigma2);
    out.set_double("model", "lambda1", mc.lambda1);
    out.set_double("model", "lambda2", mc.lambda2);
    out.set_double("model", "w2_a", mc.w2.gain_pos);
    out.set_double("model", "w2_b", mc.w2.gain_neg);
    out.set_double("model", "w2_e", mc.w2.e);
    out.set_double("model", "w2_rho", mc.w2.rho);
    out.set_double("model", "sigma4", mc.w2.sigma4);
    out.set_double("model", "sigma5", mc.w2.sigma5);
    out.set_long("model", "delay_on_n", mc.delay_on.order_n);
    out.set_double("model", "delay_on_tau", mc.delay_on.tau_ms);
    out.set_long("model", "delay_off_n", mc.delay_off.order_n);
    out.set_double("model", "delay_off_tau", mc.delay_off.tau_ms);
    out.set_long("model", "feedback_n", mc.delay_fb.order_n);
    out.set_double("model", "feedback_tau", mc.delay_fb.tau_ms);
    out.set_double("model", "feedback_gain", mc.feedback_gain);
    out.set_double("model", "dt_ms", mc.dt_ms);
}

void snapshot_eval(ConfigFile& out, const EvalConfig& ec) {
    out.set_double("eval", "gamma", ec.gamma);
    out.set_double("eval", "fa_target", ec.fa_target);
    out.set_double("eval", "match_radius", ec.match_radius);
    out.set_long("eval", "roc_points", ec.roc_points);
}

}  // namespace stmd::io

// Runtime selection between the scalar reference kernels and the SIMD
// variants. Selection happens once per process; STMD_SIMD overrides it.

#include <stmd/simd/ops.hpp>

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace stmd::simd {
namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

Level parse_level(const std::string& name) {
    if (name == "scalar") return Level::scalar;
    if (name == "avx2") return Level::avx2;
    if (name == "neon") return Level::neon;
    if (name == "auto" || name.empty()) return detect();
    throw std::invalid_argument("STMD_SIMD: unknown level '" + name + "'");
}

}  // namespace

const char* level_name(Level level) {
    switch (level) {
        case Level::scalar: return "scalar";
        case Level::avx2: return "avx2";
        case Level::neon: return "neon";
    }
    return "unknown";
}

bool supported(Level level) {
    switch (level) {
        case Level::scalar:
            return true;
        case Level::avx2:
            return avx2_ops() != nullptr && cpu_has_avx2();
        case Level::neon:
            return neon_ops() != nullptr;
    }
    return false;
}

Level detect() {
    if (supported(Level::avx2)) return Level::avx2;
    if (supported(Level::neon)) return Level::neon;
    return Level::scalar;
}

const Ops& ops_for(Level level) {
    if (!supported(level)) {
        throw std::invalid_argument(std::string("simd level not supported on this host: ") +
                                    level_name(level));
    }
    switch (level) {
        case Level::avx2: return *avx2_ops();
        case Level::neon: return *neon_ops();
        case Level::scalar: break;
    }
    return *scalar_ops();
}

const Ops& active() {
    static const Ops& selected = []() -> const Ops& {
        const char* env = std::getenv("STMD_SIMD");
        Level level = env ? parse_level(env) : detect();
        return ops_for(level);
    }();
    return selected;
}

}  // namespace stmd::simd

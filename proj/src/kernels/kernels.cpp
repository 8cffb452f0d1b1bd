#include "cvd/kernels.hpp"

#include <cstdlib>

namespace cvd::kernels {
namespace {

const Ops* resolve_default() {
    if (const char* env = std::getenv("CVDRISK_KERNELS")) {
        const std::string_view want(env);
        if (want == "scalar") return &scalar_ops();
        if (want == "avx2" && avx2_ops()) return avx2_ops();
        // Unknown or unsupported request falls through to auto.
    }
    if (const Ops* simd = avx2_ops()) return simd;
    return &scalar_ops();
}

const Ops*& active_slot() {
    static const Ops* current = resolve_default();
    return current;
}

}  // namespace

const Ops& active() { return *active_slot(); }

bool select(std::string_view name) {
    if (name == "scalar") {
        active_slot() = &scalar_ops();
        return true;
    }
    if (name == "avx2") {
        if (const Ops* simd = avx2_ops()) {
            active_slot() = simd;
            return true;
        }
        return false;
    }
    if (name == "auto") {
        active_slot() = avx2_ops() ? avx2_ops() : &scalar_ops();
        return true;
    }
    return false;
}

}  // namespace cvd::kernels

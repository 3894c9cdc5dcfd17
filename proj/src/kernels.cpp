#include "hsg/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace hsg::kernels {

namespace {

enum class Pick { Auto, Scalar, Avx2 };

Pick env_pick() {
    const char* e = std::getenv("HSG_KERNEL");
    if (!e) return Pick::Auto;
    if (std::strcmp(e, "scalar") == 0) return Pick::Scalar;
    if (std::strcmp(e, "avx2") == 0) return Pick::Avx2;
    return Pick::Auto;
}

constexpr uint32_t kVectorModulusLimit = 1u << 25;

} // namespace

const Backend& dispatch(uint32_t p) {
    static const Pick pick = env_pick();
    if (pick == Pick::Scalar) return scalar_backend();
#if defined(__x86_64__) || defined(_M_X64)
    static const bool have_avx2 = avx2_supported();
    if (pick == Pick::Avx2) return avx2_backend();
    if (have_avx2 && p < kVectorModulusLimit) return avx2_backend();
#endif
    return scalar_backend();
}

std::string_view active_name(uint32_t p) { return dispatch(p).name; }

} // namespace hsg::kernels

#include "hsg/kernels.hpp"

namespace hsg::kernels {

namespace {

void s_modp_scale(uint32_t* a, size_t n, uint32_t c, uint32_t p) {
    for (size_t i = 0; i < n; ++i)
        a[i] = static_cast<uint32_t>((static_cast<uint64_t>(a[i]) * c) % p);
}

void s_modp_neg(uint32_t* a, size_t n, uint32_t p) {
    for (size_t i = 0; i < n; ++i)
        a[i] = a[i] ? p - a[i] : 0;
}

void s_exp_add(int32_t* out, const int32_t* a, const int32_t* b, size_t n) {
    for (size_t i = 0; i < n; ++i) out[i] = a[i] + b[i];
}

void s_exp_sub(int32_t* out, const int32_t* a, const int32_t* b, size_t n) {
    for (size_t i = 0; i < n; ++i) out[i] = a[i] - b[i];
}

void s_exp_add_rows(int32_t* out, const int32_t* rows, size_t nrows, size_t n,
                    const int32_t* delta) {
    for (size_t r = 0; r < nrows; ++r)
        for (size_t j = 0; j < n; ++j) out[r * n + j] = rows[r * n + j] + delta[j];
}

bool s_exp_divides(const int32_t* a, const int32_t* b, size_t n) {
    for (size_t i = 0; i < n; ++i)
        if (a[i] > b[i]) return false;
    return true;
}

void s_exp_max(int32_t* out, const int32_t* a, const int32_t* b, size_t n) {
    for (size_t i = 0; i < n; ++i) out[i] = a[i] > b[i] ? a[i] : b[i];
}

bool s_exp_equal(const int32_t* a, const int32_t* b, size_t n) {
    for (size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

int64_t s_exp_sum(const int32_t* a, size_t n) {
    int64_t s = 0;
    for (size_t i = 0; i < n; ++i) s += a[i];
    return s;
}

} // namespace

const Backend& scalar_backend() {
    static const Backend b{"scalar",   s_modp_scale, s_modp_neg, s_exp_add,
                           s_exp_sub,  s_exp_add_rows, s_exp_divides,
                           s_exp_max,  s_exp_equal,  s_exp_sum};
    return b;
}

} // namespace hsg::kernels

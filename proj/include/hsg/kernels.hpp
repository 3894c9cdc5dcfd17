#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace hsg::kernels {

// Data-parallel primitives behind the exact arithmetic layer.
//
// modp_* operate on spans of residues in [0, p).  The vectorized variants
// require p < 2^25 so that products stay inside the exactly-representable
// double range used for the reciprocal reduction; dispatch() falls back to
// the scalar table for larger moduli.
//
// exp_* operate on packed int32 exponent rows (one row per term, `n`
// entries per row).

struct Backend {
    const char* name;

    // a[i] = a[i] * c mod p
    void (*modp_scale)(uint32_t* a, size_t n, uint32_t c, uint32_t p);
    // a[i] = p - a[i] (0 stays 0)
    void (*modp_neg)(uint32_t* a, size_t n, uint32_t p);
    // out[i] = a[i] + b[i] component-wise (plain int32 add, no modulus)
    void (*exp_add)(int32_t* out, const int32_t* a, const int32_t* b, size_t n);
    void (*exp_sub)(int32_t* out, const int32_t* a, const int32_t* b, size_t n);
    // out[r*n+j] = rows[r*n+j] + delta[j] for every row r
    void (*exp_add_rows)(int32_t* out, const int32_t* rows, size_t nrows,
                         size_t n, const int32_t* delta);
    // true iff a[i] <= b[i] for all i
    bool (*exp_divides)(const int32_t* a, const int32_t* b, size_t n);
    void (*exp_max)(int32_t* out, const int32_t* a, const int32_t* b, size_t n);
    bool (*exp_equal)(const int32_t* a, const int32_t* b, size_t n);
    int64_t (*exp_sum)(const int32_t* a, size_t n);
};

const Backend& scalar_backend();
#if defined(__x86_64__) || defined(_M_X64)
const Backend& avx2_backend();
bool avx2_supported();
#endif

// Active backend for the given modulus.  Honors HSG_KERNEL=scalar|avx2.
const Backend& dispatch(uint32_t p);

// Name of the backend dispatch(p) would pick (diagnostics).
std::string_view active_name(uint32_t p);

} // namespace hsg::kernels

#if defined(__x86_64__) || defined(_M_X64)

#include "hsg/kernels.hpp"

#include <immintrin.h>

namespace hsg::kernels {

namespace {

// Products a*c with a, c < p < 2^25 stay below 2^50, so they are exactly
// representable as doubles; the quotient estimate below is off by at most
// one and is fixed by the integer correction steps.
// _mm256_cvtepi64_pd needs AVX-512; do the conversion through memory.
inline __m256d cvt_u64_pd(__m256i x) {
    alignas(32) uint64_t tmp[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(tmp), x);
    return _mm256_set_pd(static_cast<double>(tmp[3]), static_cast<double>(tmp[2]),
                         static_cast<double>(tmp[1]), static_cast<double>(tmp[0]));
}

inline __m256i cvt_pd_u64(__m256d x) {
    alignas(32) double tmp[4];
    _mm256_store_pd(tmp, x);
    return _mm256_set_epi64x(static_cast<int64_t>(tmp[3]), static_cast<int64_t>(tmp[2]),
                             static_cast<int64_t>(tmp[1]), static_cast<int64_t>(tmp[0]));
}

void v_modp_scale(uint32_t* a, size_t n, uint32_t c, uint32_t p) {
    const __m256d inv_p = _mm256_set1_pd(1.0 / static_cast<double>(p));
    const __m256i vp = _mm256_set1_epi64x(p);
    const __m256i vc = _mm256_set1_epi64x(c);
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i va = _mm256_cvtepu32_epi64(
            _mm_loadu_si128(reinterpret_cast<const __m128i*>(a + i)));
        __m256i prod = _mm256_mul_epu32(va, vc); // lanes are < 2^25, low-32 mul exact
        // q ~= prod / p, then r = prod - q*p corrected into [0, p)
        __m256d qd = _mm256_floor_pd(_mm256_mul_pd(cvt_u64_pd(prod), inv_p));
        __m256i q = cvt_pd_u64(qd);
        __m256i qp = _mm256_mul_epu32(q, vp);
        __m256i r = _mm256_sub_epi64(prod, qp);
        // r may land in [-p, 2p); two corrections bring it home
        __m256i neg = _mm256_cmpgt_epi64(_mm256_setzero_si256(), r);
        r = _mm256_add_epi64(r, _mm256_and_si256(neg, vp));
        __m256i ge = _mm256_cmpgt_epi64(_mm256_add_epi64(r, _mm256_set1_epi64x(1)), vp);
        r = _mm256_sub_epi64(r, _mm256_and_si256(ge, vp));
        alignas(32) uint64_t out[4];
        _mm256_store_si256(reinterpret_cast<__m256i*>(out), r);
        a[i] = static_cast<uint32_t>(out[0]);
        a[i + 1] = static_cast<uint32_t>(out[1]);
        a[i + 2] = static_cast<uint32_t>(out[2]);
        a[i + 3] = static_cast<uint32_t>(out[3]);
    }
    for (; i < n; ++i)
        a[i] = static_cast<uint32_t>((static_cast<uint64_t>(a[i]) * c) % p);
}

void v_modp_neg(uint32_t* a, size_t n, uint32_t p) {
    const __m256i vp = _mm256_set1_epi32(static_cast<int32_t>(p));
    const __m256i zero = _mm256_setzero_si256();
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i isz = _mm256_cmpeq_epi32(va, zero);
        __m256i r = _mm256_sub_epi32(vp, va);
        r = _mm256_andnot_si256(isz, r);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(a + i), r);
    }
    for (; i < n; ++i) a[i] = a[i] ? p - a[i] : 0;
}

void v_exp_add(int32_t* out, const int32_t* a, const int32_t* b, size_t n) {
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), _mm256_add_epi32(va, vb));
    }
    for (; i < n; ++i) out[i] = a[i] + b[i];
}

void v_exp_sub(int32_t* out, const int32_t* a, const int32_t* b, size_t n) {
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), _mm256_sub_epi32(va, vb));
    }
    for (; i < n; ++i) out[i] = a[i] - b[i];
}

void v_exp_add_rows(int32_t* out, const int32_t* rows, size_t nrows, size_t n,
                    const int32_t* delta) {
    // Flat view: out[k] = rows[k] + delta[k % n].  Vectorize the common
    // small-arity case by looping flat when n divides the vector width
    // poorly; per-row tail handling keeps it exact for any n.
    for (size_t r = 0; r < nrows; ++r) v_exp_add(out + r * n, rows + r * n, delta, n);
}

bool v_exp_divides(const int32_t* a, const int32_t* b, size_t n) {
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        __m256i gt = _mm256_cmpgt_epi32(va, vb);
        if (!_mm256_testz_si256(gt, gt)) return false;
    }
    for (; i < n; ++i)
        if (a[i] > b[i]) return false;
    return true;
}

void v_exp_max(int32_t* out, const int32_t* a, const int32_t* b, size_t n) {
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), _mm256_max_epi32(va, vb));
    }
    for (; i < n; ++i) out[i] = a[i] > b[i] ? a[i] : b[i];
}

bool v_exp_equal(const int32_t* a, const int32_t* b, size_t n) {
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        __m256i ne = _mm256_xor_si256(va, vb);
        if (!_mm256_testz_si256(ne, ne)) return false;
    }
    for (; i < n; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

int64_t v_exp_sum(const int32_t* a, size_t n) {
    int64_t s = 0;
    size_t i = 0;
    __m256i acc = _mm256_setzero_si256();
    for (; i + 8 <= n; i += 8) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        acc = _mm256_add_epi64(acc, _mm256_cvtepi32_epi64(_mm256_castsi256_si128(va)));
        acc = _mm256_add_epi64(acc, _mm256_cvtepi32_epi64(_mm256_extracti128_si256(va, 1)));
    }
    alignas(32) int64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    s = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < n; ++i) s += a[i];
    return s;
}

} // namespace

const Backend& avx2_backend() {
    static const Backend b{"avx2",     v_modp_scale, v_modp_neg, v_exp_add,
                           v_exp_sub,  v_exp_add_rows, v_exp_divides,
                           v_exp_max,  v_exp_equal,  v_exp_sum};
    return b;
}

bool avx2_supported() { return __builtin_cpu_supports("avx2"); }

} // namespace hsg::kernels

#endif

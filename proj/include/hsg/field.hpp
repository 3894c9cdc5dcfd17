#pragma once

#include <cstdint>
#include <stdexcept>

namespace hsg {

// Residues mod p are plain uint32_t in [0, p).  All arithmetic is exact.

inline uint32_t fp_add(uint32_t a, uint32_t b, uint32_t p) {
    uint32_t s = a + b;
    return s >= p ? s - p : s;
}

inline uint32_t fp_sub(uint32_t a, uint32_t b, uint32_t p) {
    return a >= b ? a - b : a + p - b;
}

inline uint32_t fp_neg(uint32_t a, uint32_t p) { return a ? p - a : 0; }

inline uint32_t fp_mul(uint32_t a, uint32_t b, uint32_t p) {
    return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p);
}

inline uint32_t fp_from_int(long long v, uint32_t p) {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += p;
    return static_cast<uint32_t>(r);
}

// Extended Euclid; p prime and a != 0.
inline uint32_t fp_inv(uint32_t a, uint32_t p) {
    if (a == 0) throw std::domain_error("fp_inv: division by zero");
    int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        int64_t q = r / nr;
        int64_t tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (t < 0) t += p;
    return static_cast<uint32_t>(t);
}

inline uint32_t fp_div(uint32_t a, uint32_t b, uint32_t p) {
    return fp_mul(a, fp_inv(b, p), p);
}

inline bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace hsg

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hsg/context.hpp"
#include "hsg/kernels.hpp"

namespace hsg {

// Raw-row helpers: an exponent row is `n` contiguous int32 entries.

// Graded reverse lexicographic comparison of two exponent rows.
// Returns <0, 0, >0 as a < b, a == b, a > b.
inline int grevlex_cmp_raw(const int32_t* a, const int32_t* b, int n) {
    int64_t da = 0, db = 0;
    for (int i = 0; i < n; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da < db ? -1 : 1;
    // equal degree: the monomial whose last differing exponent is smaller wins
    for (int i = n - 1; i >= 0; --i) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

// Packed exponent sequence with cached total degree.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int32_t> exps) : e_(std::move(exps)) {
        deg_ = 0;
        for (int32_t v : e_) {
            if (v < 0) throw Error("monomial exponent must be nonnegative");
            deg_ += v;
        }
    }
    static Monomial one(int nvars) { return Monomial(std::vector<int32_t>(static_cast<size_t>(nvars), 0)); }
    static Monomial var(int i, int nvars, int32_t e = 1) {
        std::vector<int32_t> x(static_cast<size_t>(nvars), 0);
        x[static_cast<size_t>(i)] = e;
        return Monomial(std::move(x));
    }

    int nvars() const { return static_cast<int>(e_.size()); }
    int64_t degree() const { return deg_; }
    const std::vector<int32_t>& exps() const { return e_; }
    const int32_t* data() const { return e_.data(); }
    int32_t exp(int i) const { return e_[static_cast<size_t>(i)]; }
    bool is_one() const { return deg_ == 0; }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        r.e_.resize(e_.size());
        kernels::dispatch(2).exp_add(r.e_.data(), e_.data(), o.e_.data(), e_.size());
        r.deg_ = deg_ + o.deg_;
        return r;
    }

    // this / o; requires o | this
    Monomial operator/(const Monomial& o) const {
        Monomial r;
        r.e_.resize(e_.size());
        kernels::dispatch(2).exp_sub(r.e_.data(), e_.data(), o.e_.data(), e_.size());
        r.deg_ = deg_ - o.deg_;
        for (int32_t v : r.e_)
            if (v < 0) throw Error("monomial division is not exact");
        return r;
    }

    bool divides(const Monomial& o) const {
        if (deg_ > o.deg_) return false;
        return kernels::dispatch(2).exp_divides(e_.data(), o.e_.data(), e_.size());
    }

    Monomial lcm(const Monomial& o) const {
        Monomial r;
        r.e_.resize(e_.size());
        kernels::dispatch(2).exp_max(r.e_.data(), e_.data(), o.e_.data(), e_.size());
        r.deg_ = 0;
        for (int32_t v : r.e_) r.deg_ += v;
        return r;
    }

    bool operator==(const Monomial& o) const { return deg_ == o.deg_ && e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    std::string str(const Context& ctx) const;

private:
    std::vector<int32_t> e_;
    int64_t deg_ = 0;
};

// Module term order: graded reverse lexicographic on the monomial part,
// term over position (lower component wins ties).  Components at or past
// `elim_split` are minor: any term in a major component beats any term in a
// minor one.  This is the elimination order behind syzygy extraction.
struct ModuleOrder {
    int elim_split = -1; // -1 = no split

    // compare (ma in comp ca) vs (mb in comp cb); <0,0,>0
    int cmp(const int32_t* ma, int32_t ca, const int32_t* mb, int32_t cb, int n) const {
        if (elim_split >= 0) {
            bool major_a = ca < elim_split, major_b = cb < elim_split;
            if (major_a != major_b) return major_a ? 1 : -1;
        }
        int c = grevlex_cmp_raw(ma, mb, n);
        if (c != 0) return c;
        if (ca != cb) return ca < cb ? 1 : -1; // lower component is larger
        return 0;
    }

    std::string name() const {
        return elim_split >= 0 ? "grevlex-top-elim" : "grevlex-top";
    }
};

} // namespace hsg

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hsg/monomial.hpp"

namespace hsg {

// Element of a graded free module F = R^rank, stored as one flat term list
// sorted strictly descending under the module order.  Coefficients, component
// indices and packed exponent rows live in parallel arrays so that scaling
// and term-broadcast run through the data-parallel kernels.
//
// An ordinary polynomial is the rank-1 case (all components 0).
class VecPoly {
public:
    VecPoly() = default;
    explicit VecPoly(int nvars) : nvars_(nvars) {}

    int nvars() const { return nvars_; }
    size_t nterms() const { return coeff_.size(); }
    bool is_zero() const { return coeff_.empty(); }

    uint32_t coeff(size_t i) const { return coeff_[i]; }
    int32_t comp(size_t i) const { return comp_[i]; }
    const int32_t* exp_row(size_t i) const { return exps_.data() + i * static_cast<size_t>(nvars_); }
    Monomial mono(size_t i) const {
        return Monomial(std::vector<int32_t>(exp_row(i), exp_row(i) + nvars_));
    }
    int64_t mono_degree(size_t i) const {
        const int32_t* r = exp_row(i);
        int64_t d = 0;
        for (int k = 0; k < nvars_; ++k) d += r[k];
        return d;
    }

    // leading data (term 0)
    uint32_t lc() const { return coeff_[0]; }
    int32_t lcomp() const { return comp_[0]; }
    const int32_t* lexp() const { return exps_.data(); }
    Monomial lmono() const { return mono(0); }

    // builder API; caller must leave terms sorted or call normalize()
    void push_term(uint32_t c, int32_t component, const int32_t* row) {
        coeff_.push_back(c);
        comp_.push_back(component);
        exps_.insert(exps_.end(), row, row + nvars_);
    }
    void push_term(uint32_t c, int32_t component, const Monomial& m) {
        push_term(c, component, m.data());
    }
    void clear() {
        coeff_.clear();
        comp_.clear();
        exps_.clear();
    }
    void reserve(size_t n) {
        coeff_.reserve(n);
        comp_.reserve(n);
        exps_.reserve(n * static_cast<size_t>(nvars_));
    }

    // raw access for kernels
    uint32_t* coeff_data() { return coeff_.data(); }
    int32_t* exps_data() { return exps_.data(); }
    const std::vector<uint32_t>& coeffs() const { return coeff_; }
    const std::vector<int32_t>& comps() const { return comp_; }
    const std::vector<int32_t>& exps() const { return exps_; }

    bool operator==(const VecPoly& o) const {
        return nvars_ == o.nvars_ && coeff_ == o.coeff_ && comp_ == o.comp_ && exps_ == o.exps_;
    }
    bool operator!=(const VecPoly& o) const { return !(*this == o); }

    // canonical order restoration: sort descending, merge duplicates mod p,
    // drop zero coefficients
    void normalize(uint32_t p, const ModuleOrder& ord);

private:
    std::vector<uint32_t> coeff_;
    std::vector<int32_t> comp_;
    std::vector<int32_t> exps_;
    int nvars_ = 0;
};

// ---- arithmetic ----------------------------------------------------------

VecPoly vp_add(const VecPoly& a, const VecPoly& b, uint32_t p, const ModuleOrder& ord);
VecPoly vp_sub(const VecPoly& a, const VecPoly& b, uint32_t p, const ModuleOrder& ord);
VecPoly vp_neg(VecPoly a, uint32_t p);
VecPoly vp_scale(VecPoly a, uint32_t c, uint32_t p);

// c * x^m * a, component indices shifted by comp_delta
VecPoly vp_term_mul(const VecPoly& a, uint32_t c, const Monomial& m, uint32_t p,
                    int32_t comp_delta = 0);

// r -= c * x^m * g  (the division/reduction step); r stays sorted
void vp_axpy_term(VecPoly& r, uint32_t c, const Monomial& m, const VecPoly& g, uint32_t p,
                  const ModuleOrder& ord);

// rank-1 polynomial product
VecPoly vp_mul(const VecPoly& a, const VecPoly& b, uint32_t p, const ModuleOrder& ord);

// ---- structure -----------------------------------------------------------

// the rank-1 polynomial sitting in component c
VecPoly vp_component(const VecPoly& v, int32_t c);

// assemble a column from rank-1 entries (entry i goes to component i)
VecPoly vp_from_entries(const std::vector<VecPoly>& entries, int nvars, uint32_t p,
                        const ModuleOrder& ord);

// homogeneous degree under shifts, or nullopt if inhomogeneous; zero element
// reports degree of "any" (nullopt distinguished by is_zero upstream)
std::optional<int64_t> vp_homog_degree(const VecPoly& v, const std::vector<int64_t>& shifts);

// largest component index present + 1 (0 for the zero element)
int32_t vp_min_rank(const VecPoly& v);

std::string vp_str(const VecPoly& v, const Context& ctx, bool with_components = true);

} // namespace hsg

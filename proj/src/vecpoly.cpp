#include "hsg/vecpoly.hpp"

#include <algorithm>
#include <numeric>

#include "hsg/field.hpp"
#include "hsg/kernels.hpp"

namespace hsg {

void VecPoly::normalize(uint32_t p, const ModuleOrder& ord) {
    size_t n = nterms();
    if (n == 0) return;
    std::vector<size_t> idx(n);
    std::iota(idx.begin(), idx.end(), size_t{0});
    const int nv = nvars_;
    std::stable_sort(idx.begin(), idx.end(), [&](size_t i, size_t j) {
        return ord.cmp(exp_row(i), comp_[i], exp_row(j), comp_[j], nv) > 0;
    });
    VecPoly out(nv);
    out.reserve(n);
    size_t k = 0;
    while (k < n) {
        size_t i = idx[k];
        uint64_t acc = coeff_[i];
        size_t k2 = k + 1;
        while (k2 < n) {
            size_t j = idx[k2];
            if (comp_[i] != comp_[j] ||
                !kernels::dispatch(p).exp_equal(exp_row(i), exp_row(j), static_cast<size_t>(nv)))
                break;
            acc += coeff_[j];
            ++k2;
        }
        uint32_t c = static_cast<uint32_t>(acc % p);
        if (c != 0) out.push_term(c, comp_[i], exp_row(i));
        k = k2;
    }
    *this = std::move(out);
}

VecPoly vp_add(const VecPoly& a, const VecPoly& b, uint32_t p, const ModuleOrder& ord) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const int nv = a.nvars();
    VecPoly r(nv);
    r.reserve(a.nterms() + b.nterms());
    size_t i = 0, j = 0;
    while (i < a.nterms() && j < b.nterms()) {
        int c = ord.cmp(a.exp_row(i), a.comp(i), b.exp_row(j), b.comp(j), nv);
        if (c > 0) {
            r.push_term(a.coeff(i), a.comp(i), a.exp_row(i));
            ++i;
        } else if (c < 0) {
            r.push_term(b.coeff(j), b.comp(j), b.exp_row(j));
            ++j;
        } else {
            uint32_t s = fp_add(a.coeff(i), b.coeff(j), p);
            if (s != 0) r.push_term(s, a.comp(i), a.exp_row(i));
            ++i;
            ++j;
        }
    }
    for (; i < a.nterms(); ++i) r.push_term(a.coeff(i), a.comp(i), a.exp_row(i));
    for (; j < b.nterms(); ++j) r.push_term(b.coeff(j), b.comp(j), b.exp_row(j));
    return r;
}

VecPoly vp_neg(VecPoly a, uint32_t p) {
    kernels::dispatch(p).modp_neg(a.coeff_data(), a.nterms(), p);
    return a;
}

VecPoly vp_sub(const VecPoly& a, const VecPoly& b, uint32_t p, const ModuleOrder& ord) {
    return vp_add(a, vp_neg(b, p), p, ord);
}

VecPoly vp_scale(VecPoly a, uint32_t c, uint32_t p) {
    if (c == 0) return VecPoly(a.nvars());
    if (c == 1) return a;
    kernels::dispatch(p).modp_scale(a.coeff_data(), a.nterms(), c, p);
    return a;
}

VecPoly vp_term_mul(const VecPoly& a, uint32_t c, const Monomial& m, uint32_t p,
                    int32_t comp_delta) {
    VecPoly r(a.nvars());
    if (c == 0 || a.is_zero()) return r;
    const size_t n = a.nterms();
    const size_t nv = static_cast<size_t>(a.nvars());
    r.reserve(n);
    for (size_t i = 0; i < n; ++i) r.push_term(a.coeff(i), a.comp(i) + comp_delta, a.exp_row(i));
    const auto& k = kernels::dispatch(p);
    if (c != 1) k.modp_scale(r.coeff_data(), n, c, p);
    if (!m.is_one()) k.exp_add_rows(r.exps_data(), r.exps_data(), n, nv, m.data());
    return r;
}

void vp_axpy_term(VecPoly& r, uint32_t c, const Monomial& m, const VecPoly& g, uint32_t p,
                  const ModuleOrder& ord) {
    VecPoly scaled = vp_term_mul(g, fp_neg(c, p), m, p);
    r = vp_add(r, scaled, p, ord);
}

VecPoly vp_mul(const VecPoly& a, const VecPoly& b, uint32_t p, const ModuleOrder& ord) {
    VecPoly r(a.nvars());
    if (a.is_zero() || b.is_zero()) return r;
    // soup, then one normalize
    const size_t nv = static_cast<size_t>(a.nvars());
    r.reserve(a.nterms() * b.nterms());
    std::vector<int32_t> row(nv);
    for (size_t i = 0; i < a.nterms(); ++i) {
        for (size_t j = 0; j < b.nterms(); ++j) {
            kernels::dispatch(p).exp_add(row.data(), a.exp_row(i), b.exp_row(j), nv);
            r.push_term(fp_mul(a.coeff(i), b.coeff(j), p), a.comp(i) + b.comp(j), row.data());
        }
    }
    r.normalize(p, ord);
    return r;
}

VecPoly vp_component(const VecPoly& v, int32_t c) {
    VecPoly r(v.nvars());
    for (size_t i = 0; i < v.nterms(); ++i)
        if (v.comp(i) == c) r.push_term(v.coeff(i), 0, v.exp_row(i));
    return r;
}

VecPoly vp_from_entries(const std::vector<VecPoly>& entries, int nvars, uint32_t p,
                        const ModuleOrder& ord) {
    VecPoly r(nvars);
    for (size_t c = 0; c < entries.size(); ++c)
        for (size_t i = 0; i < entries[c].nterms(); ++i)
            r.push_term(entries[c].coeff(i), static_cast<int32_t>(c), entries[c].exp_row(i));
    r.normalize(p, ord);
    return r;
}

std::optional<int64_t> vp_homog_degree(const VecPoly& v, const std::vector<int64_t>& shifts) {
    if (v.is_zero()) return std::nullopt;
    int64_t d = v.mono_degree(0) + shifts[static_cast<size_t>(v.comp(0))];
    for (size_t i = 1; i < v.nterms(); ++i)
        if (v.mono_degree(i) + shifts[static_cast<size_t>(v.comp(i))] != d) return std::nullopt;
    return d;
}

int32_t vp_min_rank(const VecPoly& v) {
    int32_t r = 0;
    for (size_t i = 0; i < v.nterms(); ++i) r = std::max(r, v.comp(i) + 1);
    return r;
}

std::string Monomial::str(const Context& ctx) const {
    std::string s;
    for (int i = 0; i < nvars(); ++i) {
        int32_t e = exp(i);
        if (e == 0) continue;
        if (!s.empty()) s += "*";
        s += ctx.var(i);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s.empty() ? "1" : s;
}

std::string vp_str(const VecPoly& v, const Context& ctx, bool with_components) {
    if (v.is_zero()) return "0";
    std::string s;
    for (size_t i = 0; i < v.nterms(); ++i) {
        if (i) s += " + ";
        Monomial m = v.mono(i);
        bool mono_one = m.is_one();
        if (v.coeff(i) != 1 || mono_one) {
            s += std::to_string(v.coeff(i));
            if (!mono_one) s += "*";
        }
        if (!mono_one) s += m.str(ctx);
        if (with_components) s += "<" + std::to_string(v.comp(i)) + ">";
    }
    return s;
}

} // namespace hsg

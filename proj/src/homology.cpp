#include "hsg/homology.hpp"

#include <algorithm>

#include "hsg/field.hpp"

namespace hsg {

namespace {

// monomial count helper: enumerate exponent vectors of total degree t and
// count those not divisible by any of the given lead monomials
int64_t count_standard(const std::vector<Monomial>& lts, int nvars, int64_t t) {
    if (t < 0) return 0;
    for (const auto& m : lts)
        if (m.is_one()) return 0;
    std::vector<int32_t> row(static_cast<size_t>(nvars), 0);
    int64_t count = 0;
    // iterate compositions of t into nvars parts
    auto rec = [&](auto&& self, int pos, int64_t rest) -> void {
        if (pos == nvars - 1) {
            row[static_cast<size_t>(pos)] = static_cast<int32_t>(rest);
            bool standard = true;
            for (const auto& m : lts)
                if (kernels::dispatch(2).exp_divides(m.data(), row.data(),
                                                     static_cast<size_t>(nvars))) {
                    standard = false;
                    break;
                }
            if (standard) ++count;
            return;
        }
        for (int64_t e = 0; e <= rest; ++e) {
            row[static_cast<size_t>(pos)] = static_cast<int32_t>(e);
            self(self, pos + 1, rest - e);
        }
    };
    if (nvars == 0) return t == 0 && lts.empty() ? 1 : 0;
    rec(rec, 0, t);
    return count;
}

std::vector<std::vector<Monomial>> leadterms_by_component(const GBasis& gb) {
    std::vector<std::vector<Monomial>> lts(static_cast<size_t>(gb.rank));
    for (const auto& g : gb.gens) lts[static_cast<size_t>(g.lcomp())].push_back(g.lmono());
    return lts;
}

std::vector<int64_t> replicate_shifts(const std::vector<int64_t>& fshifts,
                                      const GradedModule& n, bool hom) {
    std::vector<int64_t> out;
    out.reserve(fshifts.size() * n.gen_degs.size());
    for (int64_t s : fshifts)
        for (int64_t t : n.gen_degs) out.push_back(hom ? t - s : t + s);
    return out;
}

std::vector<VecPoly> replicate_rels(int frank, const GradedModule& n) {
    std::vector<VecPoly> out;
    const int rn = n.rank();
    for (int a = 0; a < frank; ++a)
        for (const auto& w : n.rels) {
            VecPoly v(n.nvars());
            for (size_t t = 0; t < w.nterms(); ++t)
                v.push_term(w.coeff(t), a * rn + w.comp(t), w.exp_row(t));
            out.push_back(std::move(v));
        }
    return out;
}

} // namespace

GradedModule free_tensor_module(const std::vector<int64_t>& fshifts, const GradedModule& n) {
    GradedModule x;
    x.ring = n.ring;
    x.gen_degs = replicate_shifts(fshifts, n, false);
    x.rels = replicate_rels(static_cast<int>(fshifts.size()), n);
    return x;
}

GradedModule free_hom_module(const std::vector<int64_t>& fshifts, const GradedModule& n) {
    GradedModule x;
    x.ring = n.ring;
    x.gen_degs = replicate_shifts(fshifts, n, true);
    x.rels = replicate_rels(static_cast<int>(fshifts.size()), n);
    return x;
}

std::vector<VecPoly> tensor_map_cols(const std::vector<VecPoly>& dcols, int rn, int nvars) {
    std::vector<VecPoly> out;
    out.reserve(dcols.size() * static_cast<size_t>(rn));
    for (const auto& col : dcols)
        for (int j = 0; j < rn; ++j) {
            VecPoly v(nvars);
            for (size_t t = 0; t < col.nterms(); ++t)
                v.push_term(col.coeff(t), col.comp(t) * rn + j, col.exp_row(t));
            out.push_back(std::move(v));
        }
    return out;
}

std::vector<VecPoly> hom_map_cols(const std::vector<VecPoly>& dcols, int src_rank, int rn,
                                  const Ring& ring) {
    std::vector<VecPoly> out;
    out.reserve(static_cast<size_t>(src_rank) * static_cast<size_t>(rn));
    for (int a = 0; a < src_rank; ++a)
        for (int j = 0; j < rn; ++j) {
            VecPoly v(ring.nvars());
            for (size_t b = 0; b < dcols.size(); ++b) {
                VecPoly e = vp_component(dcols[b], a);
                for (size_t t = 0; t < e.nterms(); ++t)
                    v.push_term(e.coeff(t), static_cast<int32_t>(b) * rn + j, e.exp_row(t));
            }
            v.normalize(ring.p(), ModuleOrder{});
            out.push_back(ring.reduce(std::move(v)));
        }
    return out;
}

namespace {

GradedModule tensor_with_free(const Resolution& res, const GradedModule& n, int i) {
    std::vector<int64_t> fs;
    if (i >= 0 && i < static_cast<int>(res.shifts.size())) fs = res.shifts[static_cast<size_t>(i)];
    return free_tensor_module(fs, n);
}

GradedModule hom_with_free(const Resolution& res, const GradedModule& n, int i) {
    std::vector<int64_t> fs;
    if (i >= 0 && i < static_cast<int>(res.shifts.size())) fs = res.shifts[static_cast<size_t>(i)];
    return free_hom_module(fs, n);
}

} // namespace

HilbertFunction hilbert_function(const GradedModule& m, int64_t lo, int64_t hi) {
    HilbertFunction hf;
    hf.lo = lo;
    hf.hi = hi;
    if (hi < lo) return hf;
    hf.values.assign(static_cast<size_t>(hi - lo + 1), 0);
    if (m.rank() == 0) return hf;
    GBasis gb = relations_gb(m);
    auto lts = leadterms_by_component(gb);
    for (int64_t d = lo; d <= hi; ++d) {
        int64_t total = 0;
        for (int c = 0; c < m.rank(); ++c)
            total += count_standard(lts[static_cast<size_t>(c)], m.nvars(),
                                    d - m.gen_degs[static_cast<size_t>(c)]);
        hf.values[static_cast<size_t>(d - lo)] = total;
    }
    return hf;
}

int krull_dim(const GradedModule& m) {
    if (m.rank() == 0) return -1;
    return leadterm_quotient_dim(relations_gb(m));
}

namespace {

// certified degree window of a finite-length module from the pure variable
// powers of its lead-term module; false when some component misses a power
bool support_window(const GradedModule& m, const GBasis& gb, int64_t& lo, int64_t& hi) {
    auto lts = leadterms_by_component(gb);
    lo = 0;
    hi = -1;
    bool any = false;
    for (int c = 0; c < m.rank(); ++c) {
        bool unit = false;
        for (const auto& t : lts[static_cast<size_t>(c)])
            if (t.is_one()) unit = true;
        if (unit) continue; // component already dead
        int64_t span = 0;
        for (int v = 0; v < m.nvars(); ++v) {
            int64_t best = -1;
            for (const auto& t : lts[static_cast<size_t>(c)]) {
                if (t.degree() != t.exp(v)) continue; // pure power of v
                if (best < 0 || t.exp(v) < best) best = t.exp(v);
            }
            if (best < 0) return false;
            span += best - 1;
        }
        int64_t clo = m.gen_degs[static_cast<size_t>(c)];
        int64_t chi = clo + span;
        if (!any) {
            lo = clo;
            hi = chi;
            any = true;
        } else {
            lo = std::min(lo, clo);
            hi = std::max(hi, chi);
        }
    }
    return true;
}

} // namespace

LengthValue length(const GradedModule& m) {
    if (m.rank() == 0) return {true, 0};
    GBasis gb = relations_gb(m);
    if (leadterm_quotient_dim(gb) > 0) return {false, 0};
    int64_t lo, hi;
    if (!support_window(m, gb, lo, hi)) return {false, 0};
    auto lts = leadterms_by_component(gb);
    int64_t total = 0;
    for (int c = 0; c < m.rank(); ++c)
        for (int64_t d = 0; d <= hi - m.gen_degs[static_cast<size_t>(c)]; ++d)
            total += count_standard(lts[static_cast<size_t>(c)], m.nvars(), d);
    return {true, total};
}

HilbertFunction finite_hilbert_function(const GradedModule& m) {
    if (m.rank() == 0) return HilbertFunction{};
    GBasis gb = relations_gb(m);
    if (leadterm_quotient_dim(gb) > 0) throw Error("finite_hilbert_function: module has positive dimension");
    int64_t lo, hi;
    if (!support_window(m, gb, lo, hi)) throw Error("finite_hilbert_function: no certified window");
    HilbertFunction hf = hilbert_function(m, lo, hi);
    // trim zero margins for canonical comparisons
    while (hf.hi >= hf.lo && hf.values.back() == 0) {
        hf.values.pop_back();
        --hf.hi;
    }
    while (hf.hi >= hf.lo && hf.values.front() == 0) {
        hf.values.erase(hf.values.begin());
        ++hf.lo;
    }
    if (hf.hi < hf.lo) return HilbertFunction{};
    return hf;
}

int projective_dimension_ambient(const GradedModule& m) {
    if (is_zero_module(m)) throw Error("projective dimension of the zero module");
    Resolution res = resolve(m, true, m.nvars() + 1);
    return std::max(res.length(), 0);
}

int depth(const GradedModule& m) {
    if (is_zero_module(m)) return kDepthInfinite;
    return m.nvars() - projective_dimension_ambient(m);
}

std::optional<int> projective_dimension(const GradedModule& m, int bound) {
    if (!m.ring.is_quotient()) return projective_dimension_ambient(m);
    Resolution res = resolve(m, false, bound);
    if (!res.terminated) return std::nullopt;
    return std::max(res.length(), 0);
}

int default_bound(const Ring& ring) { return 2 * ring.dim() + 6; }

GradedModule tor_from_res(const Resolution& res, const GradedModule& n, int i) {
    if (i < 0) throw Error("tor: negative index");
    if (res.rank_at(i) == 0) return zero_module(n.ring);
    if (!res.terminated && i >= static_cast<int>(res.maps.size()))
        throw Error("tor: resolution bound exceeded");
    GradedModule middle = tensor_with_free(res, n, i);
    const int rn = n.rank();
    std::vector<VecPoly> in_cols, out_cols;
    GradedModule out_tgt;
    const std::vector<VecPoly>* in_ptr = nullptr;
    const std::vector<VecPoly>* out_ptr = nullptr;
    const GradedModule* tgt_ptr = nullptr;
    if (const auto* d_in = res.map_at(i + 1); d_in && !d_in->empty()) {
        in_cols = tensor_map_cols(*d_in, rn, n.nvars());
        in_ptr = &in_cols;
    }
    if (i >= 1) {
        if (const auto* d_out = res.map_at(i)) {
            out_cols = tensor_map_cols(*d_out, rn, n.nvars());
            out_tgt = tensor_with_free(res, n, i - 1);
            out_ptr = &out_cols;
            tgt_ptr = &out_tgt;
        }
    }
    GradedModule h = homology_at(middle, in_ptr, out_ptr, tgt_ptr);
    return minimal_presentation(h, true);
}

GradedModule ext_from_res(const Resolution& res, const GradedModule& n, int i) {
    if (i < 0) throw Error("ext: negative index");
    if (res.rank_at(i) == 0) return zero_module(n.ring);
    if (!res.terminated && i >= static_cast<int>(res.maps.size()))
        throw Error("ext: resolution bound exceeded");
    GradedModule middle = hom_with_free(res, n, i);
    const int rn = n.rank();
    std::vector<VecPoly> in_cols, out_cols;
    GradedModule out_tgt;
    const std::vector<VecPoly>* in_ptr = nullptr;
    const std::vector<VecPoly>* out_ptr = nullptr;
    const GradedModule* tgt_ptr = nullptr;
    if (i >= 1) {
        if (const auto* d_i = res.map_at(i)) {
            in_cols = hom_map_cols(*d_i, res.rank_at(i - 1), rn, n.ring);
            in_ptr = &in_cols;
        }
    }
    if (const auto* d_next = res.map_at(i + 1); d_next && !d_next->empty()) {
        out_cols = hom_map_cols(*d_next, res.rank_at(i), rn, n.ring);
        out_tgt = hom_with_free(res, n, i + 1);
        out_ptr = &out_cols;
        tgt_ptr = &out_tgt;
    }
    GradedModule h = homology_at(middle, in_ptr, out_ptr, tgt_ptr);
    return minimal_presentation(h, true);
}

GradedModule tor(const GradedModule& m, const GradedModule& n, int i) {
    if (!m.ring.same_as(n.ring)) throw Error("tor: ring mismatch");
    int bound = std::max(default_bound(m.ring), i + 1);
    Resolution res = resolve(m, false, bound);
    return tor_from_res(res, n, i);
}

GradedModule ext(const GradedModule& m, const GradedModule& n, int i) {
    if (!m.ring.same_as(n.ring)) throw Error("ext: ring mismatch");
    int bound = std::max(default_bound(m.ring), i + 1);
    Resolution res = resolve(m, false, bound);
    return ext_from_res(res, n, i);
}

LengthValue TorTable::length_at(int j) const {
    if (j < 0) return {true, 0};
    if (j <= jmax) return lengths[static_cast<size_t>(j)];
    if (!cert) throw Error("TorTable: index beyond computed range without certificate");
    if (cert->period == 1) return {true, 0};
    int k = j;
    while (k > jmax) k -= 2;
    if (k <= cert->onset)
        throw Error("TorTable: periodic extension not valid at this index");
    return lengths[static_cast<size_t>(k)];
}

bool TorTable::zero_at(int j) const {
    if (j < 0) return true;
    if (j <= jmax) return zero[static_cast<size_t>(j)];
    if (!cert) throw Error("TorTable: index beyond computed range without certificate");
    if (cert->period == 1) return true;
    int k = j;
    while (k > jmax) k -= 2;
    if (k <= cert->onset)
        throw Error("TorTable: periodic extension not valid at this index");
    return zero[static_cast<size_t>(k)];
}

TorTable tor_length_table(const GradedModule& m, const GradedModule& n, int bound,
                          int explicit_hint) {
    if (!m.ring.same_as(n.ring)) throw Error("tor_length_table: ring mismatch");
    TorTable t;
    t.bound = bound;
    Resolution res = resolve(m, false, bound);
    t.cert = detect_periodicity(res);
    int jmax;
    if (t.cert && t.cert->period == 1)
        jmax = std::min(bound - 1, t.cert->onset + 1);
    else if (t.cert)
        jmax = std::min(bound - 1, t.cert->onset + 2);
    else
        jmax = bound - 1;
    jmax = std::max(jmax, std::min(explicit_hint, bound - 1));
    for (int j = 0; j <= jmax; ++j) {
        GradedModule h = tor_from_res(res, n, j);
        t.lengths.push_back(length(h));
        t.zero.push_back(is_zero_module(h));
    }
    t.jmax = jmax;
    return t;
}

std::optional<int> f_index(const TorTable& t) {
    // tail flags must be eventually finite
    if (!t.cert) return std::nullopt;
    if (t.cert->period == 2) {
        if (!t.length_at(t.jmax).finite || !t.length_at(t.jmax - 1).finite) return std::nullopt;
    }
    int i = t.jmax + 1;
    while (i > 0 && t.lengths[static_cast<size_t>(i - 1)].finite) --i;
    return i;
}

std::optional<int> f_index(const GradedModule& m, const GradedModule& n, int bound) {
    return f_index(tor_length_table(m, n, bound));
}

int64_t chi_ambient(const GradedModule& m, const GradedModule& n) {
    if (!m.ring.same_as(n.ring)) throw Error("chi_ambient: ring mismatch");
    GradedModule t0 = tensor_product(m, n);
    if (krull_dim(t0) > 0) throw Error("chi_ambient: tensor product has infinite length");
    Resolution res = resolve(m, true, m.nvars() + 1);
    Ring amb = m.ring.ambient();
    GradedModule n_amb = m.ring.is_quotient()
                             ? make_module(amb, n.gen_degs, relations_over_ambient(n))
                             : n;
    int64_t chi = 0;
    for (int i = 0; i <= res.length(); ++i) {
        GradedModule h = tor_from_res(res, n_amb, i);
        LengthValue l = length(h);
        if (!l.finite) throw Error("chi_ambient: Tor has infinite length");
        chi += (i % 2 == 0) ? l.value : -l.value;
    }
    return chi;
}

} // namespace hsg

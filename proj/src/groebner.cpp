#include "hsg/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "hsg/field.hpp"

namespace hsg {

namespace {

// one full reduction pass of v against a working list of generators
VecPoly reduce_full(VecPoly v, const std::vector<VecPoly>& gens, uint32_t p,
                    const ModuleOrder& ord, int skip = -1) {
    size_t i = 0;
    while (i < v.nterms()) {
        bool hit = false;
        for (size_t g = 0; g < gens.size(); ++g) {
            if (static_cast<int>(g) == skip) continue;
            const VecPoly& gp = gens[g];
            if (gp.is_zero()) continue;
            if (gp.lcomp() != v.comp(i)) continue;
            if (!kernels::dispatch(p).exp_divides(gp.lexp(), v.exp_row(i),
                                                  static_cast<size_t>(v.nvars())))
                continue;
            Monomial q = v.mono(i) / gp.lmono();
            uint32_t c = fp_div(v.coeff(i), gp.lc(), p);
            vp_axpy_term(v, c, q, gp, p, ord); // v -= c * q * gp
            hit = true;
            break;
        }
        if (!hit) ++i;
    }
    return v;
}

VecPoly s_pair(const VecPoly& a, const VecPoly& b, uint32_t p, const ModuleOrder& ord) {
    Monomial l = a.lmono().lcm(b.lmono());
    VecPoly ta = vp_term_mul(a, fp_inv(a.lc(), p), l / a.lmono(), p);
    VecPoly tb = vp_term_mul(b, fp_inv(b.lc(), p), l / b.lmono(), p);
    return vp_sub(ta, tb, p, ord);
}

bool coprime(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < a.nvars(); ++i)
        if (a.exp(i) > 0 && b.exp(i) > 0) return false;
    return true;
}

} // namespace

GBasis groebner_basis(std::vector<VecPoly> input, int rank, std::vector<int64_t> shifts,
                      uint32_t p, int nvars, ModuleOrder ord) {
    GBasis gb;
    gb.p = p;
    gb.nvars = nvars;
    gb.rank = rank;
    gb.shifts = shifts;
    gb.ord = ord;

    std::vector<VecPoly> gens;
    for (auto& g : input) {
        g.normalize(p, ord);
        if (!g.is_zero()) gens.push_back(std::move(g));
    }

    // pair queue: (degree of the S-pair lcm term, i, j), lowest first
    using PairKey = std::tuple<int64_t, size_t, size_t>;
    auto pair_key = [&](size_t i, size_t j) -> PairKey {
        Monomial l = gens[i].lmono().lcm(gens[j].lmono());
        int64_t deg = l.degree() + shifts[static_cast<size_t>(gens[i].lcomp())];
        return {deg, std::min(i, j), std::max(i, j)};
    };
    std::set<PairKey> queue;
    auto add_pairs_for = [&](size_t j) {
        for (size_t i = 0; i < j; ++i) {
            if (gens[i].lcomp() != gens[j].lcomp()) continue;
            // the product criterion is only valid for ring elements
            if (rank == 1 && coprime(gens[i].lmono(), gens[j].lmono())) continue;
            queue.insert(pair_key(i, j));
        }
    };
    for (size_t j = 0; j < gens.size(); ++j) add_pairs_for(j);

    while (!queue.empty()) {
        auto [deg, i, j] = *queue.begin();
        queue.erase(queue.begin());
        VecPoly h = reduce_full(s_pair(gens[i], gens[j], p, ord), gens, p, ord);
        if (!h.is_zero()) {
            gens.push_back(std::move(h));
            add_pairs_for(gens.size() - 1);
        }
    }

    // minimal: drop generators whose leading term another one divides
    std::vector<bool> dropped(gens.size(), false);
    for (size_t i = 0; i < gens.size(); ++i) {
        if (dropped[i]) continue;
        for (size_t j = 0; j < gens.size(); ++j) {
            if (i == j || dropped[j]) continue;
            if (gens[j].lcomp() != gens[i].lcomp()) continue;
            if (!gens[j].lmono().divides(gens[i].lmono())) continue;
            if (gens[j].lmono() == gens[i].lmono() && j > i) continue; // keep the earlier one
            dropped[i] = true;
            break;
        }
    }
    std::vector<VecPoly> min_gens;
    for (size_t i = 0; i < gens.size(); ++i)
        if (!dropped[i]) min_gens.push_back(std::move(gens[i]));

    // monic + fully tail-reduced
    for (auto& g : min_gens) g = vp_scale(std::move(g), fp_inv(g.lc(), p), p);
    for (size_t i = 0; i < min_gens.size(); ++i)
        min_gens[i] = reduce_full(min_gens[i], min_gens, p, ord, static_cast<int>(i));

    std::sort(min_gens.begin(), min_gens.end(), [&](const VecPoly& a, const VecPoly& b) {
        return ord.cmp(a.lexp(), a.lcomp(), b.lexp(), b.lcomp(), nvars) > 0;
    });
    gb.gens = std::move(min_gens);
    return gb;
}

VecPoly normal_form(VecPoly v, const GBasis& gb, int skip) {
    v.normalize(gb.p, gb.ord);
    return reduce_full(std::move(v), gb.gens, gb.p, gb.ord, skip);
}

bool GBasis::contains(const VecPoly& v) const { return normal_form(v, *this).is_zero(); }

std::vector<VecPoly> syzygy_basis(const std::vector<VecPoly>& cols, int rank,
                                  const std::vector<int64_t>& shifts, uint32_t p, int nvars) {
    const int s = static_cast<int>(cols.size());
    std::vector<int64_t> ext_shifts = shifts;
    std::vector<VecPoly> ext_gens;
    ext_gens.reserve(cols.size());
    ModuleOrder plain{};
    for (int j = 0; j < s; ++j) {
        auto d = vp_homog_degree(cols[static_cast<size_t>(j)], shifts);
        if (!cols[static_cast<size_t>(j)].is_zero() && !d)
            throw Error("syzygy_basis: inhomogeneous column");
        // a zero column has the Koszul-trivial syzygy e_j; give its tag degree 0
        ext_shifts.push_back(d ? *d : 0);
        VecPoly g = cols[static_cast<size_t>(j)];
        g.normalize(p, plain);
        g.push_term(1, rank + j, Monomial::one(nvars));
        ext_gens.push_back(std::move(g));
    }
    ModuleOrder elim{};
    elim.elim_split = rank;
    GBasis gb = groebner_basis(std::move(ext_gens), rank + s, ext_shifts, p, nvars, elim);

    std::vector<VecPoly> syz;
    for (const auto& g : gb.gens) {
        bool pure_tag = true;
        for (size_t t = 0; t < g.nterms(); ++t)
            if (g.comp(t) < rank) {
                pure_tag = false;
                break;
            }
        if (!pure_tag || g.is_zero()) continue;
        VecPoly col(nvars);
        col.reserve(g.nterms());
        for (size_t t = 0; t < g.nterms(); ++t) col.push_term(g.coeff(t), g.comp(t) - rank, g.exp_row(t));
        syz.push_back(std::move(col));
    }
    return syz;
}

bool buchberger_criterion_holds(const GBasis& gb) {
    for (size_t i = 0; i < gb.gens.size(); ++i)
        for (size_t j = i + 1; j < gb.gens.size(); ++j) {
            if (gb.gens[i].lcomp() != gb.gens[j].lcomp()) continue;
            VecPoly h = reduce_full(s_pair(gb.gens[i], gb.gens[j], gb.p, gb.ord), gb.gens,
                                    gb.p, gb.ord);
            if (!h.is_zero()) return false;
        }
    return true;
}

} // namespace hsg

#include "hsg/resolution.hpp"

#include "hsg/field.hpp"

namespace hsg {

namespace {

bool has_unit_entry(const std::vector<VecPoly>& cols) {
    for (const auto& c : cols)
        for (size_t t = 0; t < c.nterms(); ++t)
            if (c.mono_degree(t) == 0) return true;
    return false;
}

std::vector<VecPoly> f_identity_cols(const Ring& ring, int rank) {
    std::vector<VecPoly> out;
    for (int j = 0; j < rank; ++j)
        out.push_back(vp_term_mul(ring.f, 1, Monomial::one(ring.nvars()), ring.p(), j));
    return out;
}

bool columns_equal(const std::vector<VecPoly>& a, const std::vector<VecPoly>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

// exact division of every term by f; nullopt when f does not divide
std::optional<VecPoly> divide_exact(VecPoly v, const VecPoly& f, uint32_t p) {
    ModuleOrder ord{};
    VecPoly q(v.nvars());
    const Monomial lf = f.lmono();
    while (!v.is_zero()) {
        if (!lf.divides(v.lmono())) return std::nullopt;
        Monomial mq = v.lmono() / lf;
        uint32_t c = fp_div(v.lc(), f.lc(), p);
        q.push_term(c, v.comp(0), mq);
        v = vp_sub(v, vp_term_mul(f, c, mq, p, v.comp(0)), p, ord);
    }
    q.normalize(p, ord);
    return q;
}

// Kernel generators of an MF-regime map come back as B * W for an invertible
// constant W; recombine them so that current * next = f * I exactly.  No-op
// when the composite-over-f matrix is not constant invertible.
void normalize_periodic_step(const Ring& ring, const std::vector<VecPoly>& current,
                             std::vector<VecPoly>& next, int up_rank) {
    if (!ring.is_quotient()) return;
    const int r = static_cast<int>(next.size());
    if (r == 0 || static_cast<int>(current.size()) != r || up_rank != r) return;
    Ring amb = ring.ambient();
    std::vector<VecPoly> comp = compose_columns(current, next, amb);
    const uint32_t p = ring.p();
    // C = comp / f must be an invertible scalar matrix
    std::vector<std::vector<uint32_t>> c(static_cast<size_t>(r),
                                         std::vector<uint32_t>(static_cast<size_t>(r), 0));
    for (int j = 0; j < r; ++j) {
        auto q = divide_exact(comp[static_cast<size_t>(j)], ring.f, p);
        if (!q) return;
        for (size_t t = 0; t < q->nterms(); ++t) {
            if (q->mono_degree(t) != 0) return; // not a constant matrix
            c[static_cast<size_t>(q->comp(t))][static_cast<size_t>(j)] = q->coeff(t);
        }
    }
    // invert C over the field (Gauss-Jordan); bail out if singular
    std::vector<std::vector<uint32_t>> inv(static_cast<size_t>(r),
                                           std::vector<uint32_t>(static_cast<size_t>(r), 0));
    for (int i = 0; i < r; ++i) inv[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    for (int col = 0; col < r; ++col) {
        int piv = -1;
        for (int i = col; i < r; ++i)
            if (c[static_cast<size_t>(i)][static_cast<size_t>(col)] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return;
        std::swap(c[static_cast<size_t>(piv)], c[static_cast<size_t>(col)]);
        std::swap(inv[static_cast<size_t>(piv)], inv[static_cast<size_t>(col)]);
        uint32_t d = fp_inv(c[static_cast<size_t>(col)][static_cast<size_t>(col)], p);
        for (int j = 0; j < r; ++j) {
            c[static_cast<size_t>(col)][static_cast<size_t>(j)] =
                fp_mul(c[static_cast<size_t>(col)][static_cast<size_t>(j)], d, p);
            inv[static_cast<size_t>(col)][static_cast<size_t>(j)] =
                fp_mul(inv[static_cast<size_t>(col)][static_cast<size_t>(j)], d, p);
        }
        for (int i = 0; i < r; ++i) {
            if (i == col) continue;
            uint32_t m = c[static_cast<size_t>(i)][static_cast<size_t>(col)];
            if (!m) continue;
            for (int j = 0; j < r; ++j) {
                c[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    fp_sub(c[static_cast<size_t>(i)][static_cast<size_t>(j)],
                           fp_mul(m, c[static_cast<size_t>(col)][static_cast<size_t>(j)], p), p);
                inv[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    fp_sub(inv[static_cast<size_t>(i)][static_cast<size_t>(j)],
                           fp_mul(m, inv[static_cast<size_t>(col)][static_cast<size_t>(j)], p), p);
            }
        }
    }
    // next <- next * C^{-1}
    ModuleOrder ord{};
    std::vector<VecPoly> out;
    out.reserve(static_cast<size_t>(r));
    for (int l = 0; l < r; ++l) {
        VecPoly acc(ring.nvars());
        for (int j = 0; j < r; ++j) {
            uint32_t w = inv[static_cast<size_t>(j)][static_cast<size_t>(l)];
            if (!w) continue;
            acc = vp_add(acc, vp_scale(next[static_cast<size_t>(j)], w, p), p, ord);
        }
        out.push_back(std::move(acc));
    }
    next = std::move(out);
}

} // namespace

Resolution resolve(const GradedModule& m, bool over_ambient, int bound) {
    if (bound < 1) throw Error("resolve: bound must be >= 1");
    Resolution res;
    res.over_ambient = over_ambient || !m.ring.is_quotient();
    res.ring = res.over_ambient ? m.ring.ambient() : m.ring;
    res.bound = bound;

    GradedModule m0 = res.over_ambient && m.ring.is_quotient()
                          ? make_module(res.ring, m.gen_degs, relations_over_ambient(m))
                          : make_module(res.ring, m.gen_degs, m.rels);
    GradedModule mp = minimal_presentation(m0, true);

    res.shifts.push_back(mp.gen_degs);
    std::vector<VecPoly> current = mp.rels;
    const int max_steps = res.over_ambient ? m.nvars() + 1 : bound;

    for (int step = 1; step <= max_steps; ++step) {
        if (current.empty()) {
            res.terminated = true;
            break;
        }
        std::vector<int64_t> coldegs;
        for (const auto& c : current)
            coldegs.push_back(*vp_homog_degree(c, res.shifts.back()));
        if (has_unit_entry(current)) throw Error("resolve: internal error, non-minimal map");
        res.maps.push_back(current);
        res.shifts.push_back(coldegs);
        if (step == bound && !res.over_ambient) break;

        std::vector<VecPoly> syz = syzygies_over_ring(current, static_cast<int>(res.shifts[res.shifts.size() - 2].size()),
                                                      res.shifts[res.shifts.size() - 2], res.ring);
        std::vector<VecPoly> next = minimal_generators(syz, {}, static_cast<int>(current.size()),
                                                       coldegs, res.ring);
        normalize_periodic_step(res.ring, current, next,
                                static_cast<int>(res.shifts[res.shifts.size() - 2].size()));
        // exactness guard: d_k composed with d_{k+1} must vanish
        for (const auto& c : next)
            if (!apply_columns(current, c, res.ring).is_zero())
                throw Error("resolve: internal error, composite not zero");
        current = std::move(next);
    }
    if (res.over_ambient && !res.terminated)
        throw Error("resolve: resolution over the ambient ring failed to terminate");
    return res;
}

BettiTable betti_table(const Resolution& res) {
    BettiTable bt;
    for (size_t i = 0; i < res.shifts.size(); ++i) {
        bt.totals.push_back(static_cast<int64_t>(res.shifts[i].size()));
        for (int64_t d : res.shifts[i]) bt.entries[{static_cast<int>(i), d}] += 1;
    }
    return bt;
}

std::optional<PeriodicityCertificate> detect_periodicity(const Resolution& res) {
    if (res.terminated) {
        PeriodicityCertificate c;
        c.onset = res.length() < 0 ? 0 : res.length();
        c.period = 1;
        c.verified_through = res.bound;
        return c;
    }
    const int top = static_cast<int>(res.maps.size()); // largest index with d_top computed
    auto pair_is_mf = [&](int k) {
        const auto* a = res.map_at(k);
        const auto* b = res.map_at(k + 1);
        if (!a || !b) return false;
        const int r0 = res.rank_at(k - 1), r1 = res.rank_at(k), r2 = res.rank_at(k + 1);
        if (r0 != r1 || r1 != r2) return false;
        Ring amb = res.ring.ambient();
        auto fi = f_identity_cols(res.ring, r0);
        return columns_equal(compose_columns(*a, *b, amb), fi) &&
               columns_equal(compose_columns(*b, *a, amb), fi);
    };
    for (int onset = 1; onset < top; ++onset) {
        bool ok = true;
        for (int k = onset; k < top && ok; ++k) ok = pair_is_mf(k);
        if (ok) {
            PeriodicityCertificate c;
            c.onset = onset;
            c.period = 2;
            c.verified_through = top;
            return c;
        }
    }
    return std::nullopt;
}

bool mf_identity_holds(const MatrixFactorization& mf) {
    Ring amb = mf.ring.ambient();
    const int r = static_cast<int>(mf.row_shifts.size());
    if (static_cast<int>(mf.mid_shifts.size()) != r ||
        static_cast<int>(mf.col_shifts.size()) != r)
        return false;
    auto fi = f_identity_cols(mf.ring, r);
    return columns_equal(compose_columns(mf.a, mf.b, amb), fi) &&
           columns_equal(compose_columns(mf.b, mf.a, amb), fi);
}

MatrixFactorization extract_mf(const Resolution& res, int at) {
    if (res.over_ambient) throw Error("extract_mf: needs a resolution over the hypersurface ring");
    for (int attempt = 0; attempt < 2; ++attempt) {
        int k = at + attempt;
        const auto* a = res.map_at(k);
        const auto* b = res.map_at(k + 1);
        if (!a || !b) break;
        MatrixFactorization mf;
        mf.ring = res.ring;
        mf.a = *a;
        mf.b = *b;
        mf.row_shifts = res.shifts[static_cast<size_t>(k - 1)];
        mf.mid_shifts = res.shifts[static_cast<size_t>(k)];
        mf.col_shifts = res.shifts[static_cast<size_t>(k + 1)];
        if (mf_identity_holds(mf)) return mf;
    }
    throw Error("extract_mf: factorization identity fails at " + std::to_string(at) +
                " and " + std::to_string(at + 1));
}

GradedModule mf_cokernel(const MatrixFactorization& mf) {
    GradedModule m = make_module(mf.ring, mf.row_shifts, mf.a);
    return minimal_presentation(m, true);
}

} // namespace hsg

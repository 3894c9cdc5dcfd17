#include "hsg/module.hpp"

#include <algorithm>

#include "hsg/field.hpp"

namespace hsg {

namespace {

const ModuleOrder kPlain{};

// deterministic ordering for column lists: degree, then leading term, then
// raw data
bool vp_sort_less(const VecPoly& a, const VecPoly& b, const std::vector<int64_t>& shifts,
                  int nvars) {
    if (a.is_zero() != b.is_zero()) return b.is_zero();
    if (a.is_zero()) return false;
    auto da = vp_homog_degree(a, shifts), db = vp_homog_degree(b, shifts);
    int64_t xa = da ? *da : 0, xb = db ? *db : 0;
    if (xa != xb) return xa < xb;
    int c = kPlain.cmp(a.lexp(), a.lcomp(), b.lexp(), b.lcomp(), nvars);
    if (c != 0) return c > 0;
    if (a.comps() != b.comps()) return a.comps() < b.comps();
    if (a.exps() != b.exps()) return a.exps() < b.exps();
    return a.coeffs() < b.coeffs();
}

void sort_and_dedupe(std::vector<VecPoly>& cols, const std::vector<int64_t>& shifts, int nvars) {
    std::sort(cols.begin(), cols.end(),
              [&](const VecPoly& a, const VecPoly& b) { return vp_sort_less(a, b, shifts, nvars); });
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
}

std::vector<VecPoly> f_columns(const Ring& ring, int rank) {
    std::vector<VecPoly> out;
    if (!ring.is_quotient()) return out;
    out.reserve(static_cast<size_t>(rank));
    for (int i = 0; i < rank; ++i) out.push_back(vp_term_mul(ring.f, 1, Monomial::one(ring.nvars()), ring.p(), i));
    return out;
}

VecPoly unit_column(int comp, int nvars) {
    VecPoly v(nvars);
    v.push_term(1, comp, Monomial::one(nvars));
    return v;
}

// restriction of v to components < k, reduced
VecPoly project_head(const VecPoly& v, size_t k, const Ring& ring) {
    VecPoly pr(ring.nvars());
    for (size_t t = 0; t < v.nterms(); ++t)
        if (v.comp(t) < static_cast<int32_t>(k)) pr.push_term(v.coeff(t), v.comp(t), v.exp_row(t));
    pr.normalize(ring.p(), kPlain);
    return ring.reduce(std::move(pr));
}

// generators (unpruned) of {v in R^src_rank : cols(v) in im(tgt.rels)}
std::vector<VecPoly> preimage_generators(const std::vector<VecPoly>& cols,
                                         const GradedModule& tgt, int src_rank,
                                         const Ring& ring) {
    if (tgt.rank() == 0) {
        std::vector<VecPoly> out;
        for (int i = 0; i < src_rank; ++i) {
            VecPoly v(ring.nvars());
            v.push_term(1, i, Monomial::one(ring.nvars()));
            out.push_back(std::move(v));
        }
        return out;
    }
    std::vector<VecPoly> combined = cols;
    combined.insert(combined.end(), tgt.rels.begin(), tgt.rels.end());
    std::vector<VecPoly> raw = syzygies_over_ring(combined, tgt.rank(), tgt.gen_degs, ring);
    std::vector<VecPoly> out;
    for (const auto& sy : raw) {
        VecPoly pr = project_head(sy, cols.size(), ring);
        if (!pr.is_zero()) out.push_back(std::move(pr));
    }
    return out;
}

// presentation of the subquotient <kept> / <base> inside R^rank: relations
// are the coefficient vectors on `kept` of elements landing in <base>
std::vector<VecPoly> subquotient_relations(const std::vector<VecPoly>& kept,
                                           const std::vector<VecPoly>& base, int rank,
                                           const std::vector<int64_t>& shifts,
                                           const std::vector<int64_t>& kept_degs,
                                           const Ring& ring) {
    if (kept.empty()) return {};
    std::vector<VecPoly> all = kept;
    all.insert(all.end(), base.begin(), base.end());
    std::vector<VecPoly> raw = syzygies_over_ring(all, rank, shifts, ring);
    std::vector<VecPoly> rels;
    for (const auto& sy : raw) {
        VecPoly pr = project_head(sy, kept.size(), ring);
        if (!pr.is_zero()) rels.push_back(std::move(pr));
    }
    sort_and_dedupe(rels, kept_degs, ring.nvars());
    return rels;
}

// q (rank-1) times a column
VecPoly poly_times_column(const VecPoly& q, const VecPoly& col, const Ring& ring) {
    VecPoly r(ring.nvars());
    if (q.is_zero() || col.is_zero()) return r;
    std::vector<int32_t> row(static_cast<size_t>(ring.nvars()));
    r.reserve(q.nterms() * col.nterms());
    for (size_t i = 0; i < q.nterms(); ++i)
        for (size_t j = 0; j < col.nterms(); ++j) {
            kernels::dispatch(ring.p()).exp_add(row.data(), q.exp_row(i), col.exp_row(j),
                                                static_cast<size_t>(ring.nvars()));
            r.push_term(fp_mul(q.coeff(i), col.coeff(j), ring.p()), col.comp(j), row.data());
        }
    r.normalize(ring.p(), kPlain);
    return ring.reduce(std::move(r));
}

} // namespace

GradedModule make_module(Ring ring, std::vector<int64_t> gen_degs, std::vector<VecPoly> rels) {
    GradedModule m;
    m.ring = std::move(ring);
    m.gen_degs = std::move(gen_degs);
    for (auto& c : rels) {
        c.normalize(m.p(), kPlain);
        c = m.ring.reduce(std::move(c));
        if (c.is_zero()) continue;
        if (vp_min_rank(c) > m.rank()) throw Error("relation column exceeds module rank");
        if (!vp_homog_degree(c, m.gen_degs)) throw Error("inhomogeneous relation column");
        m.rels.push_back(std::move(c));
    }
    return m;
}

GradedModule free_module(Ring ring, std::vector<int64_t> gen_degs) {
    GradedModule m;
    m.ring = std::move(ring);
    m.gen_degs = std::move(gen_degs);
    m.minimal = true;
    return m;
}

GradedModule zero_module(Ring ring) { return free_module(std::move(ring), {}); }

GradedModule residue_field(const Ring& ring) {
    std::vector<VecPoly> rels;
    for (int i = 0; i < ring.nvars(); ++i) {
        VecPoly v(ring.nvars());
        v.push_term(1, 0, Monomial::var(i, ring.nvars()));
        rels.push_back(std::move(v));
    }
    GradedModule m = make_module(ring, {0}, std::move(rels));
    m.minimal = true;
    return m;
}

std::vector<VecPoly> relations_over_ambient(const GradedModule& m) {
    std::vector<VecPoly> cols = m.rels;
    auto fcols = f_columns(m.ring, m.rank());
    cols.insert(cols.end(), fcols.begin(), fcols.end());
    return cols;
}

GBasis relations_gb(const GradedModule& m) {
    return groebner_basis(relations_over_ambient(m), m.rank(), m.gen_degs, m.p(), m.nvars());
}

std::vector<VecPoly> minimal_generators(const std::vector<VecPoly>& cols,
                                        const std::vector<VecPoly>& base, int rank,
                                        const std::vector<int64_t>& shifts, const Ring& ring) {
    struct Cand {
        VecPoly v;
        int64_t deg;
        size_t pos;
    };
    std::vector<Cand> cands;
    for (size_t i = 0; i < cols.size(); ++i) {
        VecPoly v = cols[i];
        v.normalize(ring.p(), kPlain);
        v = ring.reduce(std::move(v));
        if (v.is_zero()) continue;
        auto d = vp_homog_degree(v, shifts);
        if (!d) throw Error("minimal_generators: inhomogeneous column");
        cands.push_back({std::move(v), *d, i});
    }
    std::stable_sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
        return a.deg != b.deg ? a.deg < b.deg : a.pos < b.pos;
    });

    std::vector<VecPoly> fixed = base;
    auto fcols = f_columns(ring, rank);
    fixed.insert(fixed.end(), fcols.begin(), fcols.end());

    std::vector<VecPoly> kept;
    std::vector<VecPoly> pool = fixed;
    GBasis gb = groebner_basis(pool, rank, shifts, ring.p(), ring.nvars());
    for (auto& c : cands) {
        if (!normal_form(c.v, gb).is_zero()) {
            kept.push_back(c.v);
            pool.push_back(std::move(c.v));
            gb = groebner_basis(pool, rank, shifts, ring.p(), ring.nvars());
        }
    }
    return kept;
}

std::vector<VecPoly> syzygies_over_ring(const std::vector<VecPoly>& cols, int rank,
                                        const std::vector<int64_t>& shifts, const Ring& ring) {
    if (cols.empty()) return {};
    std::vector<VecPoly> aug;
    std::vector<int64_t> coldegs;
    for (const auto& c : cols) {
        VecPoly v = c;
        v.normalize(ring.p(), kPlain);
        v = ring.reduce(std::move(v));
        auto d = vp_homog_degree(v, shifts);
        if (!v.is_zero() && !d) throw Error("syzygies_over_ring: inhomogeneous column");
        coldegs.push_back(d ? *d : 0);
        aug.push_back(std::move(v));
    }
    const size_t s = aug.size();
    auto fcols = f_columns(ring, rank);
    aug.insert(aug.end(), fcols.begin(), fcols.end());

    std::vector<VecPoly> raw = syzygy_basis(aug, rank, shifts, ring.p(), ring.nvars());

    std::vector<VecPoly> out;
    for (const auto& sy : raw) {
        VecPoly pr(ring.nvars());
        for (size_t t = 0; t < sy.nterms(); ++t)
            if (sy.comp(t) < static_cast<int32_t>(s)) pr.push_term(sy.coeff(t), sy.comp(t), sy.exp_row(t));
        pr.normalize(ring.p(), kPlain);
        pr = ring.reduce(std::move(pr));
        if (!pr.is_zero()) out.push_back(std::move(pr));
    }
    sort_and_dedupe(out, coldegs, ring.nvars());
    return out;
}

std::optional<std::vector<VecPoly>> express_in_generators(const VecPoly& v,
                                                          const std::vector<VecPoly>& cols,
                                                          int rank,
                                                          const std::vector<int64_t>& shifts,
                                                          const Ring& ring) {
    std::vector<VecPoly> all;
    all.push_back(v);
    all.insert(all.end(), cols.begin(), cols.end());
    std::vector<VecPoly> syz = syzygies_over_ring(all, rank, shifts, ring);
    for (const auto& sy : syz) {
        VecPoly head = vp_component(sy, 0);
        if (head.is_zero() || head.nterms() != 1 || !head.lmono().is_one()) continue;
        uint32_t inv = fp_inv(fp_neg(head.lc(), ring.p()), ring.p());
        std::vector<VecPoly> out;
        out.reserve(cols.size());
        for (size_t j = 0; j < cols.size(); ++j) {
            VecPoly cj = vp_scale(vp_component(sy, static_cast<int32_t>(j + 1)), inv, ring.p());
            out.push_back(ring.reduce(std::move(cj)));
        }
        return out;
    }
    return std::nullopt;
}

VecPoly apply_columns(const std::vector<VecPoly>& cols, const VecPoly& v, const Ring& ring) {
    VecPoly r(ring.nvars());
    for (size_t t = 0; t < v.nterms(); ++t) {
        const auto j = static_cast<size_t>(v.comp(t));
        if (j >= cols.size()) throw Error("apply_columns: component out of range");
        VecPoly part = vp_term_mul(cols[j], v.coeff(t), v.mono(t), ring.p());
        for (size_t q = 0; q < part.nterms(); ++q) r.push_term(part.coeff(q), part.comp(q), part.exp_row(q));
    }
    r.normalize(ring.p(), kPlain);
    return ring.reduce(std::move(r));
}

std::vector<VecPoly> compose_columns(const std::vector<VecPoly>& a,
                                     const std::vector<VecPoly>& b, const Ring& ring) {
    std::vector<VecPoly> out;
    out.reserve(b.size());
    for (const auto& col : b) out.push_back(apply_columns(a, col, ring));
    return out;
}

std::vector<VecPoly> transpose_columns(const std::vector<VecPoly>& cols, int nrows,
                                       const Ring& ring) {
    std::vector<VecPoly> out(static_cast<size_t>(nrows), VecPoly(ring.nvars()));
    for (size_t j = 0; j < cols.size(); ++j)
        for (size_t t = 0; t < cols[j].nterms(); ++t)
            out[static_cast<size_t>(cols[j].comp(t))].push_term(cols[j].coeff(t),
                                                                static_cast<int32_t>(j),
                                                                cols[j].exp_row(t));
    for (auto& c : out) c.normalize(ring.p(), kPlain);
    return out;
}

VecPoly entry_of(const std::vector<VecPoly>& cols, int row, int col) {
    return vp_component(cols[static_cast<size_t>(col)], row);
}

GradedModule minimal_presentation(const GradedModule& m, bool minimize_relations) {
    std::vector<int64_t> degs = m.gen_degs;
    std::vector<VecPoly> rels;
    for (const auto& c : m.rels) {
        VecPoly v = m.ring.reduce(c);
        if (!v.is_zero()) rels.push_back(std::move(v));
    }

    for (;;) {
        int pi = -1, pj = -1;
        uint32_t pc = 0;
        for (int i = 0; i < static_cast<int>(degs.size()) && pi < 0; ++i) {
            for (int j = 0; j < static_cast<int>(rels.size()); ++j) {
                VecPoly e = vp_component(rels[static_cast<size_t>(j)], i);
                if (!e.is_zero() && e.nterms() == 1 && e.lmono().is_one()) {
                    pi = i;
                    pj = j;
                    pc = e.lc();
                    break;
                }
            }
        }
        if (pi < 0) break;

        const VecPoly pivot_col = rels[static_cast<size_t>(pj)];
        for (int l = 0; l < static_cast<int>(rels.size()); ++l) {
            if (l == pj) continue;
            VecPoly q = vp_component(rels[static_cast<size_t>(l)], pi);
            if (q.is_zero()) continue;
            VecPoly sub = poly_times_column(vp_scale(std::move(q), fp_inv(pc, m.p()), m.p()),
                                            pivot_col, m.ring);
            rels[static_cast<size_t>(l)] =
                m.ring.reduce(vp_sub(rels[static_cast<size_t>(l)], sub, m.p(), kPlain));
        }
        rels.erase(rels.begin() + pj);
        // delete row pi and renumber
        for (auto& col : rels) {
            VecPoly nv(m.nvars());
            for (size_t t = 0; t < col.nterms(); ++t) {
                int32_t c = col.comp(t);
                if (c == pi) continue; // cleared above
                nv.push_term(col.coeff(t), c > pi ? c - 1 : c, col.exp_row(t));
            }
            col = std::move(nv);
        }
        degs.erase(degs.begin() + pi);
        std::vector<VecPoly> alive;
        for (auto& c : rels)
            if (!c.is_zero()) alive.push_back(std::move(c));
        rels = std::move(alive);
    }

    sort_and_dedupe(rels, degs, m.nvars());
    if (minimize_relations && !rels.empty())
        rels = minimal_generators(rels, {}, static_cast<int>(degs.size()), degs, m.ring);

    GradedModule out;
    out.ring = m.ring;
    out.gen_degs = std::move(degs);
    out.rels = std::move(rels);
    out.minimal = true;
    return out;
}

bool is_zero_module(const GradedModule& m) {
    if (m.rank() == 0) return true;
    if (m.rels.empty()) return false;
    return minimal_presentation(m).rank() == 0;
}

bool is_free_module(const GradedModule& m) {
    return minimal_presentation(m, true).rels.empty();
}

GradedModule direct_sum(const GradedModule& a, const GradedModule& b) {
    if (!a.ring.same_as(b.ring)) throw Error("direct_sum: ring mismatch");
    GradedModule m;
    m.ring = a.ring;
    m.gen_degs = a.gen_degs;
    m.gen_degs.insert(m.gen_degs.end(), b.gen_degs.begin(), b.gen_degs.end());
    m.rels = a.rels;
    for (const auto& c : b.rels) {
        VecPoly v(m.nvars());
        for (size_t t = 0; t < c.nterms(); ++t)
            v.push_term(c.coeff(t), c.comp(t) + a.rank(), c.exp_row(t));
        m.rels.push_back(std::move(v));
    }
    m.minimal = a.minimal && b.minimal;
    return m;
}

GradedModule degree_shift(GradedModule m, int64_t delta) {
    for (auto& d : m.gen_degs) d += delta;
    return m;
}

GradedModule tensor_product(const GradedModule& a, const GradedModule& b) {
    if (!a.ring.same_as(b.ring)) throw Error("tensor_product: ring mismatch");
    GradedModule m;
    m.ring = a.ring;
    const int ra = a.rank(), rb = b.rank();
    m.gen_degs.reserve(static_cast<size_t>(ra) * static_cast<size_t>(rb));
    for (int i = 0; i < ra; ++i)
        for (int j = 0; j < rb; ++j) m.gen_degs.push_back(a.gen_degs[static_cast<size_t>(i)] + b.gen_degs[static_cast<size_t>(j)]);
    for (const auto& u : a.rels)
        for (int j = 0; j < rb; ++j) {
            VecPoly v(m.nvars());
            for (size_t t = 0; t < u.nterms(); ++t)
                v.push_term(u.coeff(t), u.comp(t) * rb + j, u.exp_row(t));
            m.rels.push_back(std::move(v));
        }
    for (int i = 0; i < ra; ++i)
        for (const auto& w : b.rels) {
            VecPoly v(m.nvars());
            for (size_t t = 0; t < w.nterms(); ++t)
                v.push_term(w.coeff(t), i * rb + w.comp(t), w.exp_row(t));
            m.rels.push_back(std::move(v));
        }
    return m;
}

GradedModule ideal_module(const Ring& ring, const std::vector<VecPoly>& gens) {
    std::vector<int64_t> degs;
    std::vector<VecPoly> cols;
    for (const auto& g : gens) {
        VecPoly v = g;
        v.normalize(ring.p(), kPlain);
        v = ring.reduce(std::move(v));
        if (v.is_zero()) throw Error("ideal_module: generator is zero in the ring");
        auto d = vp_homog_degree(v, {0});
        if (!d) throw Error("ideal_module: inhomogeneous generator");
        degs.push_back(*d);
        cols.push_back(std::move(v));
    }
    std::vector<VecPoly> rels = syzygies_over_ring(cols, 1, {0}, ring);
    GradedModule m = make_module(ring, std::move(degs), std::move(rels));
    return minimal_presentation(m, true);
}

bool map_well_defined(const ModuleMap& f) {
    if (static_cast<int>(f.mat.size()) != f.src.rank()) return false;
    GBasis gb = relations_gb(f.tgt);
    for (const auto& u : f.src.rels)
        if (!normal_form(apply_columns(f.mat, u, f.src.ring), gb).is_zero()) return false;
    return true;
}

SubmoduleData kernel_of_map(const ModuleMap& f) {
    const Ring& ring = f.src.ring;
    if (static_cast<int>(f.mat.size()) != f.src.rank())
        throw Error("kernel_of_map: matrix has wrong number of columns");
    std::vector<VecPoly> cands = preimage_generators(f.mat, f.tgt, f.src.rank(), ring);
    std::vector<VecPoly> kept = minimal_generators(cands, f.src.rels, f.src.rank(),
                                                   f.src.gen_degs, ring);
    std::vector<int64_t> kdegs;
    for (const auto& g : kept) kdegs.push_back(*vp_homog_degree(g, f.src.gen_degs));
    std::vector<VecPoly> rels = subquotient_relations(kept, f.src.rels, f.src.rank(),
                                                      f.src.gen_degs, kdegs, ring);
    SubmoduleData out;
    out.module = make_module(ring, std::move(kdegs), std::move(rels));
    out.module.minimal = true;
    out.gens = std::move(kept);
    return out;
}

GradedModule cokernel_of_map(const ModuleMap& f) {
    std::vector<VecPoly> rels = f.mat;
    rels.insert(rels.end(), f.tgt.rels.begin(), f.tgt.rels.end());
    GradedModule m = make_module(f.tgt.ring, f.tgt.gen_degs, std::move(rels));
    return minimal_presentation(m, true);
}

GradedModule homology_at(const GradedModule& middle, const std::vector<VecPoly>* in_cols,
                         const std::vector<VecPoly>* out_cols, const GradedModule* out_target) {
    const Ring& ring = middle.ring;
    std::vector<VecPoly> cands;
    if (out_cols && out_target) {
        cands = preimage_generators(*out_cols, *out_target, middle.rank(), ring);
    } else {
        for (int i = 0; i < middle.rank(); ++i) cands.push_back(unit_column(i, ring.nvars()));
    }

    std::vector<VecPoly> base;
    if (in_cols) base = *in_cols;
    base.insert(base.end(), middle.rels.begin(), middle.rels.end());

    std::vector<VecPoly> kept = minimal_generators(cands, base, middle.rank(), middle.gen_degs, ring);
    std::vector<int64_t> degs;
    for (const auto& g : kept) degs.push_back(*vp_homog_degree(g, middle.gen_degs));
    std::vector<VecPoly> rels =
        subquotient_relations(kept, base, middle.rank(), middle.gen_degs, degs, ring);

    GradedModule h = make_module(ring, std::move(degs), std::move(rels));
    h.minimal = true;
    return h;
}

SubmoduleData hom_module(const GradedModule& m, const GradedModule& n) {
    if (!m.ring.same_as(n.ring)) throw Error("hom_module: ring mismatch");
    const Ring& ring = m.ring;
    const int rm = m.rank(), rn = n.rank();

    // Hom(F0^M, N): free cover of rank rm*rn, index i*rn + j
    std::vector<int64_t> h0_degs;
    for (int i = 0; i < rm; ++i)
        for (int j = 0; j < rn; ++j)
            h0_degs.push_back(n.gen_degs[static_cast<size_t>(j)] - m.gen_degs[static_cast<size_t>(i)]);
    std::vector<VecPoly> h0_rels;
    for (int i = 0; i < rm; ++i)
        for (const auto& w : n.rels) {
            VecPoly v(ring.nvars());
            for (size_t t = 0; t < w.nterms(); ++t)
                v.push_term(w.coeff(t), i * rn + w.comp(t), w.exp_row(t));
            h0_rels.push_back(std::move(v));
        }
    GradedModule hom_f0 = make_module(ring, h0_degs, h0_rels);

    const int s = static_cast<int>(m.rels.size());
    std::vector<int64_t> coldegs;
    for (const auto& c : m.rels) coldegs.push_back(*vp_homog_degree(c, m.gen_degs));

    // Hom(F1^M, N): rank s*rn, index l*rn + j
    std::vector<int64_t> h1_degs;
    for (int l = 0; l < s; ++l)
        for (int j = 0; j < rn; ++j) h1_degs.push_back(n.gen_degs[static_cast<size_t>(j)] - coldegs[static_cast<size_t>(l)]);
    std::vector<VecPoly> h1_rels;
    for (int l = 0; l < s; ++l)
        for (const auto& w : n.rels) {
            VecPoly v(ring.nvars());
            for (size_t t = 0; t < w.nterms(); ++t)
                v.push_term(w.coeff(t), l * rn + w.comp(t), w.exp_row(t));
            h1_rels.push_back(std::move(v));
        }
    GradedModule hom_f1 = make_module(ring, h1_degs, h1_rels);

    // map: phi |-> phi o d1; basis (i,j) goes to sum_l entry(i,l) e_{(l,j)}
    std::vector<VecPoly> mat;
    mat.reserve(static_cast<size_t>(rm) * static_cast<size_t>(rn));
    for (int i = 0; i < rm; ++i)
        for (int j = 0; j < rn; ++j) {
            VecPoly v(ring.nvars());
            for (int l = 0; l < s; ++l) {
                VecPoly e = entry_of(m.rels, i, l);
                for (size_t t = 0; t < e.nterms(); ++t)
                    v.push_term(e.coeff(t), l * rn + j, e.exp_row(t));
            }
            v.normalize(ring.p(), kPlain);
            mat.push_back(ring.reduce(std::move(v)));
        }

    ModuleMap f{hom_f0, hom_f1, std::move(mat)};
    return kernel_of_map(f);
}

SubmoduleData dual_module(const GradedModule& m) {
    return hom_module(m, free_module(m.ring, {0}));
}

} // namespace hsg

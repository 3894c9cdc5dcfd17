#include "hsg/theta.hpp"

#include <algorithm>

#include "hsg/field.hpp"

namespace hsg {

namespace {
const ModuleOrder kPlain{};

int64_t ceil_div(int64_t a, int64_t b) { return (a + b - 1) / b; }

} // namespace

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::Violated: return "violated";
        default: return "not-applicable";
    }
}

ThetaReport theta(const GradedModule& m, const GradedModule& n, int bound) {
    if (!m.ring.same_as(n.ring)) throw Error("theta: ring mismatch");
    if (!m.ring.is_quotient()) throw Error("theta: defined over hypersurface rings only");
    const int d = m.ring.dim();
    const int B = bound > 0 ? bound : 2 * d + 8;
    const int e0 = static_cast<int>(ceil_div(d + 1, 2));
    TorTable table = tor_length_table(m, n, B, 2 * e0 + 4);
    auto fi = f_index(table);
    if (!fi)
        throw ThetaUndefined("theta undefined: finite length index not certified within bound " +
                             std::to_string(B));
    int e = std::max<int>(e0, static_cast<int>(ceil_div(*fi - 1, 2)));
    // make sure the top index is either computed or covered by the periodic
    // extension (the certificate onset normally sits below dim R + 2)
    if (2 * e + 4 > table.jmax &&
        !(table.cert && (table.cert->period == 1 || 2 * e + 1 > table.cert->onset))) {
        table = tor_length_table(m, n, std::max(B, 2 * e + 6), 2 * e + 4);
        fi = f_index(table);
        if (!fi) throw ThetaUndefined("theta undefined: finite length index not certified");
    }
    ThetaReport rep;
    rep.f_index = *fi;
    rep.e_used = e;
    rep.bound = B;
    auto len = [&](int j) {
        LengthValue l = table.length_at(j);
        if (!l.finite) throw ThetaUndefined("theta: Tor_" + std::to_string(j) + " has infinite length");
        return l.value;
    };
    int64_t v1 = len(2 * e + 2) - len(2 * e + 1);
    int64_t v2 = len(2 * e + 4) - len(2 * e + 3);
    rep.stability.push_back({e, len(2 * e + 2), len(2 * e + 1)});
    rep.stability.push_back({e + 1, len(2 * e + 4), len(2 * e + 3)});
    if (v1 != v2)
        throw Error("theta: stability disagreement between e and e+1 (internal trap)");
    rep.value = v1;
    return rep;
}

RigidityReport check_rigidity(const GradedModule& m, const GradedModule& n, int bound) {
    if (!m.ring.same_as(n.ring)) throw Error("check_rigidity: ring mismatch");
    const int B = bound > 0 ? bound : default_bound(m.ring);
    TorTable table = tor_length_table(m, n, B);
    RigidityReport rep;
    rep.bound = B;
    // extension past jmax needs the certificate onset inside the table
    bool extendable = table.fully_certified();
    rep.certified_all_indices = extendable;
    const int scan_hi = extendable ? B : table.jmax;

    std::optional<int> first;
    for (int j = 0; j <= scan_hi; ++j)
        if (table.zero_at(j)) {
            first = j;
            break;
        }
    rep.first_vanishing = first;
    if (!first) {
        rep.kind = RigidityReport::Kind::NoVanishingFound;
        return rep;
    }
    for (int j = *first; j <= scan_hi; ++j) rep.propagation.push_back({j, table.length_at(j)});
    for (int j = *first + 1; j <= scan_hi; ++j)
        if (!table.zero_at(j)) {
            rep.kind = RigidityReport::Kind::Counterexample;
            rep.counterexample_index = j;
            return rep;
        }
    rep.kind = RigidityReport::Kind::RigidWithinBound;
    return rep;
}

ShortExactSequence split_sequence(const GradedModule& a, const GradedModule& c) {
    ShortExactSequence s;
    s.sub = a;
    s.quot = c;
    s.mid = direct_sum(a, c);
    const int nv = a.nvars();
    for (int i = 0; i < a.rank(); ++i) {
        VecPoly v(nv);
        v.push_term(1, i, Monomial::one(nv));
        s.incl.push_back(std::move(v));
    }
    for (int j = 0; j < s.mid.rank(); ++j) {
        VecPoly v(nv);
        if (j >= a.rank()) v.push_term(1, j - a.rank(), Monomial::one(nv));
        s.proj.push_back(std::move(v));
    }
    return s;
}

bool certify_ses(const ShortExactSequence& s, int64_t extra) {
    ModuleMap f{s.sub, s.mid, s.incl};
    ModuleMap g{s.mid, s.quot, s.proj};
    if (!map_well_defined(f) || !map_well_defined(g)) return false;
    GBasis quot_gb = relations_gb(s.quot);
    for (const auto& col : s.incl)
        if (!normal_form(apply_columns(s.proj, col, s.mid.ring), quot_gb).is_zero()) return false;
    if (!kernel_of_map(f).gens.empty()) return false;
    if (!is_zero_module(cokernel_of_map(g))) return false;

    int64_t lo = 0, hi = 0;
    bool any = false;
    for (const GradedModule* mm : {&s.sub, &s.mid, &s.quot})
        for (int64_t dgr : mm->gen_degs) {
            lo = any ? std::min(lo, dgr) : dgr;
            hi = any ? std::max(hi, dgr) : dgr;
            any = true;
        }
    hi += extra;
    HilbertFunction ha = hilbert_function(s.sub, lo, hi);
    HilbertFunction hb = hilbert_function(s.mid, lo, hi);
    HilbertFunction hc = hilbert_function(s.quot, lo, hi);
    for (int64_t dgr = lo; dgr <= hi; ++dgr)
        if (hb.at(dgr) != ha.at(dgr) + hc.at(dgr)) return false;
    return true;
}

BiadditivityReport theta_biadditivity_check(const GradedModule& m, const ShortExactSequence& s,
                                            int bound) {
    BiadditivityReport rep;
    rep.sequence_certified = certify_ses(s);
    if (!rep.sequence_certified) return rep;
    rep.theta_sub = theta(m, s.sub, bound).value;
    rep.theta_mid = theta(m, s.mid, bound).value;
    rep.theta_quot = theta(m, s.quot, bound).value;
    rep.holds = rep.theta_mid == rep.theta_sub + rep.theta_quot;
    return rep;
}

DualReflexivityResult dual_and_reflexivity(const GradedModule& m) {
    DualReflexivityResult r;
    r.dual = dual_module(m);
    r.bidual = dual_module(r.dual.module);
    const Ring& ring = m.ring;
    const int lambda = r.dual.module.rank();
    std::vector<int64_t> g0_dual_shifts;
    for (int64_t dgr : r.dual.module.gen_degs) g0_dual_shifts.push_back(-dgr);

    for (int i = 0; i < m.rank(); ++i) {
        VecPoly row(m.nvars());
        for (int j = 0; j < lambda; ++j) {
            VecPoly e = vp_component(r.dual.gens[static_cast<size_t>(j)], i);
            for (size_t t = 0; t < e.nterms(); ++t) row.push_term(e.coeff(t), j, e.exp_row(t));
        }
        row.normalize(ring.p(), kPlain);
        row = ring.reduce(std::move(row));
        if (row.is_zero()) {
            r.bidual_map.push_back(VecPoly(m.nvars()));
            continue;
        }
        auto coeffs = express_in_generators(row, r.bidual.gens, lambda, g0_dual_shifts, ring);
        if (!coeffs)
            throw Error("dual_and_reflexivity: evaluation image not inside the bidual (internal)");
        VecPoly col(m.nvars());
        for (size_t k = 0; k < coeffs->size(); ++k)
            for (size_t t = 0; t < (*coeffs)[k].nterms(); ++t)
                col.push_term((*coeffs)[k].coeff(t), static_cast<int32_t>(k), (*coeffs)[k].exp_row(t));
        col.normalize(ring.p(), kPlain);
        r.bidual_map.push_back(ring.reduce(std::move(col)));
    }

    ModuleMap f{m, r.bidual.module, r.bidual_map};
    r.injective = kernel_of_map(f).gens.empty();
    r.surjective = is_zero_module(cokernel_of_map(f));
    r.reflexive = r.injective && r.surjective;
    return r;
}

PushforwardResult pushforward(const GradedModule& m) {
    const Ring& ring = m.ring;
    SubmoduleData dual = dual_module(m);
    PushforwardResult r;
    r.lambda = dual.module.rank();
    for (int64_t dgr : dual.module.gen_degs) r.free_shifts.push_back(-dgr);

    for (int i = 0; i < m.rank(); ++i) {
        VecPoly col(m.nvars());
        for (int j = 0; j < r.lambda; ++j) {
            VecPoly e = vp_component(dual.gens[static_cast<size_t>(j)], i);
            for (size_t t = 0; t < e.nterms(); ++t) col.push_term(e.coeff(t), j, e.exp_row(t));
        }
        col.normalize(ring.p(), kPlain);
        r.embedding.push_back(ring.reduce(std::move(col)));
    }

    ModuleMap f{m, free_module(ring, r.free_shifts), r.embedding};
    if (!kernel_of_map(f).gens.empty())
        throw Error("pushforward undefined: the bidual map has a kernel (module has torsion)");

    r.m1 = minimal_presentation(make_module(ring, r.free_shifts, r.embedding), true);

    // Hilbert certification of 0 -> M -> R^lambda -> M1 -> 0
    int64_t lo = 0, hi = 0;
    bool any = false;
    auto widen = [&](const std::vector<int64_t>& ds) {
        for (int64_t dgr : ds) {
            lo = any ? std::min(lo, dgr) : dgr;
            hi = any ? std::max(hi, dgr) : dgr;
            any = true;
        }
    };
    widen(m.gen_degs);
    widen(r.free_shifts);
    widen(r.m1.gen_degs);
    hi += m.nvars() + 3;
    HilbertFunction hm = hilbert_function(m, lo, hi);
    HilbertFunction hf = hilbert_function(free_module(ring, r.free_shifts), lo, hi);
    HilbertFunction h1 = hilbert_function(r.m1, lo, hi);
    r.hilbert_certified = true;
    for (int64_t dgr = lo; dgr <= hi; ++dgr)
        if (hm.at(dgr) - hf.at(dgr) + h1.at(dgr) != 0) r.hilbert_certified = false;
    return r;
}

PushforwardPropertyReport verify_pushforward_properties(const GradedModule& m) {
    PushforwardPropertyReport rep;
    PushforwardResult pf;
    try {
        pf = pushforward(m);
    } catch (const Error&) {
        rep.defined = false;
        rep.free_iff = rep.mcm_propagates = rep.depth_drop = Verdict::NotApplicable;
        return rep;
    }
    rep.defined = true;
    const int d = m.ring.dim();
    bool m_free = is_free_module(m);
    bool m1_free = is_free_module(pf.m1); // zero module counts as free
    rep.free_iff = (m_free == m1_free) ? Verdict::Holds : Verdict::Violated;

    rep.depth_m = depth(m);
    rep.depth_m1 = depth(pf.m1);
    rep.depth_drop = (rep.depth_m1 >= rep.depth_m - 1) ? Verdict::Holds : Verdict::Violated;

    if (rep.depth_m == d) {
        bool m1_mcm = is_zero_module(pf.m1) || rep.depth_m1 == d;
        rep.mcm_propagates = m1_mcm ? Verdict::Holds : Verdict::Violated;
    } else {
        rep.mcm_propagates = Verdict::NotApplicable;
    }
    return rep;
}

DepthFormulaReport verify_depth_formula(const GradedModule& m, const GradedModule& n, int bound) {
    DepthFormulaReport rep;
    if (is_zero_module(m) || is_zero_module(n)) return rep;
    const int B = bound > 0 ? bound : default_bound(m.ring);
    TorTable table = tor_length_table(m, n, B);
    if (!table.fully_certified()) return rep;
    bool vanish = true;
    for (int j = 1; j <= table.jmax && vanish; ++j) vanish = table.zero_at(j);
    rep.hypothesis_holds = vanish;
    if (!vanish) return rep; // hypothesis violated: not applicable, never a failure
    rep.depth_m = depth(m);
    rep.depth_n = depth(n);
    rep.depth_ring = depth(free_module(m.ring, {0}));
    rep.depth_tensor = depth(tensor_product(m, n));
    rep.verdict = (rep.depth_m + rep.depth_n == rep.depth_ring + rep.depth_tensor)
                      ? Verdict::Holds
                      : Verdict::Violated;
    return rep;
}

DimensionInequalityReport verify_dimension_inequality(const GradedModule& m,
                                                      const GradedModule& n) {
    DimensionInequalityReport rep;
    rep.dim_ring = m.ring.dim();
    rep.dim_m = krull_dim(m);
    rep.dim_n = krull_dim(n);
    rep.tensor_finite = krull_dim(tensor_product(m, n)) <= 0;
    if (!rep.tensor_finite) return rep;
    rep.verdict = (rep.dim_m + rep.dim_n <= rep.dim_ring) ? Verdict::Holds : Verdict::Violated;
    return rep;
}

GradedModule transpose_cokernel(const GradedModule& n, int i) {
    Resolution res = resolve(n, false, std::max(i + 1, 1));
    if (res.rank_at(i + 1) == 0) return zero_module(n.ring);
    const auto* d = res.map_at(i + 1);
    std::vector<VecPoly> cols = transpose_columns(*d, res.rank_at(i), n.ring);
    std::vector<int64_t> degs;
    for (int64_t s : res.shifts[static_cast<size_t>(i + 1)]) degs.push_back(-s);
    GradedModule c = make_module(n.ring, std::move(degs), std::move(cols));
    return minimal_presentation(c, true);
}

JothilingamReport jothilingam_check(const GradedModule& m, int n, bool assume_reduced_class,
                                    int bound) {
    if (n < 1) throw Error("jothilingam_check: n must be >= 1");
    JothilingamReport rep;
    rep.n = n;
    rep.over_ambient = !m.ring.is_quotient();
    const int B = std::max(bound > 0 ? bound : default_bound(m.ring), n + 1);
    if (rep.over_ambient) {
        rep.ext_vanishes = is_zero_module(ext(m, m, n));
        int pd = projective_dimension_ambient(m);
        rep.pd_less = pd < n;
        rep.biconditional_asserted = true;
        rep.verdict = (rep.ext_vanishes == *rep.pd_less) ? Verdict::Holds : Verdict::Violated;
        return rep;
    }
    Resolution res = resolve(m, false, B);
    rep.ext_vanishes = is_zero_module(ext_from_res(res, m, n));
    if (res.terminated)
        rep.pd_less = res.length() < n;
    else
        rep.pd_less = false; // pd exceeds the bound, hence certainly >= n
    rep.biconditional_asserted = assume_reduced_class;
    if (assume_reduced_class)
        rep.verdict = (rep.ext_vanishes == *rep.pd_less) ? Verdict::Holds : Verdict::Violated;
    return rep;
}

VecPoly random_linear_form(const Ring& ring, SeededRng& rng) {
    const int nv = ring.nvars();
    for (;;) {
        VecPoly v(nv);
        for (int i = 0; i < nv; ++i) {
            uint32_t c = rng.below(ring.p());
            if (c) v.push_term(c, 0, Monomial::var(i, nv));
        }
        v.normalize(ring.p(), kPlain);
        if (!v.is_zero()) return v;
    }
}

namespace {

// multiplication by a ring element is injective on the module?
bool mult_is_injective(const GradedModule& m, const VecPoly& ell) {
    std::vector<VecPoly> cols;
    for (int i = 0; i < m.rank(); ++i)
        cols.push_back(m.ring.reduce(vp_term_mul(ell, 1, Monomial::one(m.nvars()), m.p(), i)));
    ModuleMap f{m, m, cols};
    return kernel_of_map(f).gens.empty();
}

GradedModule quotient_by_forms(const GradedModule& m, const std::vector<VecPoly>& forms) {
    std::vector<VecPoly> rels = m.rels;
    for (const auto& ell : forms)
        for (int i = 0; i < m.rank(); ++i)
            rels.push_back(vp_term_mul(ell, 1, Monomial::one(m.nvars()), m.p(), i));
    return make_module(m.ring, m.gen_degs, rels);
}

} // namespace

McmCriterionReport mcm_criterion_check(const GradedModule& m, uint64_t seed, int bound) {
    if (!m.ring.is_quotient()) throw Error("mcm_criterion_check: needs a hypersurface ring");
    if (is_zero_module(m)) throw Error("mcm_criterion_check: zero module");
    McmCriterionReport rep;
    rep.seed = seed;
    const Ring& ring = m.ring;
    const int d = ring.dim();
    rep.dim_ring = d;
    rep.depth_m = depth(m);
    rep.is_mcm = rep.depth_m == d;
    const int B = bound > 0 ? bound : default_bound(ring);

    SeededRng rng(seed);
    std::vector<VecPoly> forms;
    GradedModule ring_mod = free_module(ring, {0});
    const int retry_budget = 16;
    for (int k = 0; k < d; ++k) {
        bool found = false;
        for (int attempt = 0; attempt < retry_budget; ++attempt) {
            VecPoly ell = random_linear_form(ring, rng);
            GradedModule rq = quotient_by_forms(ring_mod, forms);
            bool ok = mult_is_injective(rq, ell);
            if (ok && rep.is_mcm) {
                GradedModule mq = quotient_by_forms(m, forms);
                ok = mult_is_injective(mq, ell);
            }
            if (ok) {
                rep.parameter_forms.push_back(vp_str(ell, *ring.ctx, false));
                forms.push_back(std::move(ell));
                found = true;
                break;
            }
            ++rep.retries;
        }
        if (!found) throw Error("mcm_criterion_check: parameter search failed after retries");
    }

    GradedModule n = quotient_by_forms(ring_mod, forms);
    TorTable table = tor_length_table(m, n, B);
    rep.tor1_zero = table.zero_at(1);
    bool higher = true;
    const int hi = table.fully_certified() ? B : table.jmax;
    for (int j = 1; j <= hi && higher; ++j) higher = table.zero_at(j);
    rep.higher_tor_zero = higher;

    if (rep.is_mcm)
        rep.verdict = (rep.tor1_zero && rep.higher_tor_zero) ? Verdict::Holds : Verdict::Violated;
    else
        rep.verdict = !rep.tor1_zero ? Verdict::Holds : Verdict::Violated;
    return rep;
}

TensorDepthReport verify_tensor_depth(TensorDepthCase which, const GradedModule& m,
                                      const GradedModule* n_in, int r, int bound) {
    TensorDepthReport rep;
    rep.which = which;
    const Ring& ring = m.ring;
    const int d = ring.dim();
    const int B = bound > 0 ? bound : default_bound(ring);

    GradedModule n = n_in ? *n_in : GradedModule{};
    SubmoduleData dual;
    if (which == TensorDepthCase::FreenessFromDual) {
        dual = dual_module(m);
        n = dual.module;
    }
    if (n.rank() == 0 && !is_zero_module(m) && which != TensorDepthCase::FreenessFromDual && !n_in)
        throw Error("verify_tensor_depth: this case needs a second module");

    TorTable table = tor_length_table(m, n, B);
    auto fi = f_index(table);

    auto add = [&](std::string name, bool ok, std::string note = "") {
        rep.hypotheses.push_back({std::move(name), ok, std::move(note)});
    };

    GradedModule tensor = tensor_product(m, n);
    int depth_tensor = depth(tensor);
    int depth_m = depth(m);

    std::optional<int64_t> theta_val;
    if (fi) {
        try {
            theta_val = theta(m, n, B).value;
        } catch (const Error&) {
        }
    }

    switch (which) {
        case TensorDepthCase::VanishingFromTheta: {
            add("vector bundle proxy: f-index(M, N) <= 1", fi.has_value() && *fi <= 1,
                fi ? "f-index = " + std::to_string(*fi) : "not certified");
            add("depth(M) >= 1", depth_m >= 1, "depth = " + std::to_string(depth_m));
            add("theta(M, N) = 0", theta_val && *theta_val == 0,
                theta_val ? "theta = " + std::to_string(*theta_val) : "theta undefined");
            add("depth(M tensor N) >= 1", depth_tensor >= 1,
                "depth = " + std::to_string(depth_tensor));
            break;
        }
        case TensorDepthCase::DepthBound: {
            add("0 <= r < dim R", r >= 0 && r < d, "r = " + std::to_string(r));
            add("depth(M) >= r", depth_m >= r, "depth = " + std::to_string(depth_m));
            int depth_n = depth(n);
            int dim_n = krull_dim(n);
            bool sr = depth_n >= std::min<int64_t>(r, dim_n);
            add("N satisfies (S_r) at the irrelevant ideal", sr,
                "depth = " + std::to_string(depth_n) + ", dim = " + std::to_string(dim_n));
            add("vector bundle proxy: f-index(M, N) <= 1", fi.has_value() && *fi <= 1,
                fi ? "f-index = " + std::to_string(*fi) : "not certified");
            add("theta(M, N) = 0", theta_val && *theta_val == 0,
                theta_val ? "theta = " + std::to_string(*theta_val) : "theta undefined");
            int dim_tensor = krull_dim(tensor);
            bool hvanish = depth_tensor > r || r > dim_tensor;
            add("local cohomology H^r of M tensor N vanishes (via depth)", hvanish,
                "depth = " + std::to_string(depth_tensor) + ", dim = " + std::to_string(dim_tensor));
            break;
        }
        case TensorDepthCase::FreenessFromDual: {
            add("depth(M tensor M*) >= 2", depth_tensor >= 2,
                "depth = " + std::to_string(depth_tensor));
            bool vanish = table.fully_certified();
            const int hi = table.fully_certified() ? B : table.jmax;
            for (int j = 1; j <= hi && vanish; ++j) vanish = table.zero_at(j);
            add("Tor_i(M, M*) = 0 for all i > 0", vanish,
                table.fully_certified() ? "certified by periodicity" : "no periodicity certificate");
            break;
        }
    }

    rep.all_hypotheses = true;
    for (const auto& h : rep.hypotheses) rep.all_hypotheses = rep.all_hypotheses && h.verified;
    if (!rep.all_hypotheses) {
        rep.verdict = Verdict::NotApplicable;
        return rep;
    }

    switch (which) {
        case TensorDepthCase::VanishingFromTheta: {
            bool vanish = table.fully_certified();
            const int hi = table.fully_certified() ? B : table.jmax;
            for (int j = 1; j <= hi && vanish; ++j) vanish = table.zero_at(j);
            rep.conclusion_verified = vanish;
            break;
        }
        case TensorDepthCase::DepthBound: {
            bool ok = depth_tensor >= r + 1;
            if (r > 0) {
                bool vanish = table.fully_certified();
                const int hi = table.fully_certified() ? B : table.jmax;
                for (int j = 1; j <= hi && vanish; ++j) vanish = table.zero_at(j);
                ok = ok && vanish;
            }
            rep.conclusion_verified = ok;
            break;
        }
        case TensorDepthCase::FreenessFromDual: {
            rep.conclusion_verified = is_free_module(m);
            break;
        }
    }
    rep.verdict = *rep.conclusion_verified ? Verdict::Holds : Verdict::Violated;
    return rep;
}

} // namespace hsg

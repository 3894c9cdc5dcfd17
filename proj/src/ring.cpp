#include "hsg/ring.hpp"

#include "hsg/field.hpp"

namespace hsg {

VecPoly Ring::reduce(VecPoly v) const {
    if (!is_quotient() || v.is_zero()) return v;
    ModuleOrder ord{};
    const Monomial lf = f.lmono();
    const uint32_t lc = f.lc();
    size_t i = 0;
    while (i < v.nterms()) {
        if (lf.divides(v.mono(i))) {
            Monomial q = v.mono(i) / lf;
            uint32_t c = fp_div(v.coeff(i), lc, p());
            VecPoly fe = vp_term_mul(f, c, q, p(), v.comp(i));
            v = vp_sub(v, fe, p(), ord);
        } else {
            ++i;
        }
    }
    return v;
}

Ring ambient_ring(uint32_t p, std::vector<std::string> vars) {
    auto ctx = std::make_shared<const Context>(p, std::move(vars));
    return Ring{ctx, VecPoly(ctx->nvars()), 0};
}

Ring define_hypersurface(ContextPtr ctx, VecPoly f) {
    ModuleOrder ord{};
    f.normalize(ctx->p(), ord);
    if (f.is_zero()) throw Error("hypersurface relation must be nonzero");
    auto deg = vp_homog_degree(f, {0});
    if (!deg) throw Error("hypersurface relation must be homogeneous");
    if (*deg < 1) throw Error("hypersurface relation must have degree >= 1");
    return Ring{std::move(ctx), std::move(f), *deg};
}

Ring define_hypersurface(uint32_t p, std::vector<std::string> vars, const std::string& f_expr) {
    auto ctx = std::make_shared<const Context>(p, std::move(vars));
    return define_hypersurface(ctx, parse_polynomial(f_expr, *ctx));
}

VecPoly derivative(const VecPoly& g, int var, const Context& ctx) {
    VecPoly r(ctx.nvars());
    for (size_t i = 0; i < g.nterms(); ++i) {
        int32_t e = g.exp_row(i)[var];
        if (e == 0) continue;
        uint32_t c = fp_mul(g.coeff(i), fp_from_int(e, ctx.p()), ctx.p());
        if (c == 0) continue;
        std::vector<int32_t> row(g.exp_row(i), g.exp_row(i) + ctx.nvars());
        row[static_cast<size_t>(var)] -= 1;
        r.push_term(c, g.comp(i), row.data());
    }
    ModuleOrder ord{};
    r.normalize(ctx.p(), ord);
    return r;
}

SingularityReport check_isolated_singularity(const Ring& ring) {
    if (!ring.is_quotient()) throw Error("isolated-singularity test needs a hypersurface ring");
    SingularityReport rep;
    const Context& ctx = *ring.ctx;
    for (size_t i = 0; i < ring.f.nterms(); ++i)
        for (int j = 0; j < ctx.nvars(); ++j)
            if (ring.f.exp_row(i)[j] > 0 &&
                static_cast<uint32_t>(ring.f.exp_row(i)[j]) % ctx.p() == 0)
                rep.char_warning = true;

    std::vector<VecPoly> gens{ring.f};
    for (int j = 0; j < ctx.nvars(); ++j) gens.push_back(derivative(ring.f, j, ctx));
    GBasis gb = groebner_basis(std::move(gens), 1, {0}, ctx.p(), ctx.nvars());
    rep.jacobian_dim = leadterm_quotient_dim(gb);
    rep.isolated = rep.jacobian_dim <= 0;
    return rep;
}

int monomial_ideal_dim(const std::vector<Monomial>& gens, int nvars) {
    for (const auto& g : gens)
        if (g.is_one()) return -1;
    if (nvars > 24) throw Error("monomial_ideal_dim: too many variables");
    int best = -1;
    for (uint32_t mask = 0; mask < (1u << nvars); ++mask) {
        bool ok = true;
        for (const auto& g : gens) {
            bool inside = true; // support(g) contained in the subset?
            for (int i = 0; i < nvars && inside; ++i)
                if (g.exp(i) > 0 && !(mask & (1u << i))) inside = false;
            if (inside) {
                ok = false;
                break;
            }
        }
        if (ok) best = std::max(best, __builtin_popcount(mask));
    }
    // best == -1 means even the empty subset contains a generator support,
    // i.e. a unit generator — caught above; the empty set is otherwise fine.
    return best;
}

int leadterm_quotient_dim(const GBasis& gb) {
    int best = -1;
    for (int c = 0; c < gb.rank; ++c) {
        std::vector<Monomial> lts;
        for (const auto& g : gb.gens)
            if (g.lcomp() == c) lts.push_back(g.lmono());
        best = std::max(best, monomial_ideal_dim(lts, gb.nvars));
    }
    return best;
}

} // namespace hsg

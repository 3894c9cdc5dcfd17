#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hsg/groebner.hpp"
#include "hsg/parser.hpp"

namespace hsg {

// The ambient graded polynomial ring S = k[x_0..x_n], or the hypersurface
// quotient R = S/(f) for a nonzero homogeneous f of positive degree.
// Elements of R are represented by their normal forms mod f in S.
struct Ring {
    ContextPtr ctx;
    VecPoly f;           // zero element <=> ambient ring
    int64_t f_degree = 0;

    bool is_quotient() const { return !f.is_zero(); }
    int nvars() const { return ctx->nvars(); }
    uint32_t p() const { return ctx->p(); }
    int dim() const { return ctx->nvars() - (is_quotient() ? 1 : 0); }

    // ambient ring with the same context
    Ring ambient() const { return Ring{ctx, VecPoly(ctx->nvars()), 0}; }

    // componentwise normal form mod f (identity for the ambient ring)
    VecPoly reduce(VecPoly v) const;

    bool same_as(const Ring& o) const {
        return ctx->same_as(*o.ctx) && f == o.f;
    }
};

Ring ambient_ring(uint32_t p, std::vector<std::string> vars);

// Validates primality, homogeneity and degree >= 1 of the relation.
Ring define_hypersurface(uint32_t p, std::vector<std::string> vars, const std::string& f_expr);
Ring define_hypersurface(ContextPtr ctx, VecPoly f);

// formal partial derivative
VecPoly derivative(const VecPoly& g, int var, const Context& ctx);

struct SingularityReport {
    bool isolated = false;
    int jacobian_dim = 0;       // Krull dimension of S/(f, all partials)
    bool char_warning = false;  // some exponent of f is divisible by p
};

// Jacobian criterion: the singular locus is supported at the irrelevant
// maximal ideal iff dim S/(f, df/dx_0, ..., df/dx_n) <= 0.
SingularityReport check_isolated_singularity(const Ring& ring);

// Krull dimension of S/I for a monomial ideal given by generator monomials:
// the largest cardinality of a variable subset meeting no generator support.
// Returns -1 when 1 lies in the ideal.
int monomial_ideal_dim(const std::vector<Monomial>& gens, int nvars);

// dim S / (leading-term ideal of gb restricted to each component); for a
// submodule U of a free module this bounds dim of F/U: the maximum over
// components.  Returns -1 for the zero module (all components blocked by 1).
int leadterm_quotient_dim(const GBasis& gb);

} // namespace hsg

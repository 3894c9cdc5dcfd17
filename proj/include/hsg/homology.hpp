#pragma once

#include "hsg/resolution.hpp"

namespace hsg {

// ---- graded size invariants ------------------------------------------------

struct HilbertFunction {
    int64_t lo = 0, hi = -1;
    std::vector<int64_t> values; // values[d - lo]
    int64_t at(int64_t d) const {
        return (d < lo || d > hi) ? 0 : values[static_cast<size_t>(d - lo)];
    }
    bool operator==(const HilbertFunction& o) const = default;
};

// dim_k of each graded piece over the window [lo, hi]
HilbertFunction hilbert_function(const GradedModule& m, int64_t lo, int64_t hi);

// Krull dimension of the module (-1 for the zero module)
int krull_dim(const GradedModule& m);

struct LengthValue {
    bool finite = false;
    int64_t value = 0;
    bool operator==(const LengthValue& o) const = default;
};

// finite iff krull_dim <= 0; the summation window is certified by the pure
// variable powers in the lead-term module of the relations
LengthValue length(const GradedModule& m);

// full Hilbert function of a finite-length module over its certified support
HilbertFunction finite_hilbert_function(const GradedModule& m);

inline constexpr int kDepthInfinite = 1 << 20;

// depth via the Auslander-Buchsbaum identity over the ambient ring:
// nvars - pd_S(M); the zero module gets the distinguished infinite value
int depth(const GradedModule& m);

// length of the minimal free resolution over the ambient ring
int projective_dimension_ambient(const GradedModule& m);

// pd over the module's own ring within `bound`: the exact value if the
// resolution terminates, nullopt if it is still nonzero at the bound
std::optional<int> projective_dimension(const GradedModule& m, int bound);

// ---- complex plumbing (shared by Tor/Ext and the stable layer) ---------------

// F tensor N as a presented module, F free with the given generator degrees
GradedModule free_tensor_module(const std::vector<int64_t>& fshifts, const GradedModule& n);
// Hom(F, N) as a presented module (generator degrees negate)
GradedModule free_hom_module(const std::vector<int64_t>& fshifts, const GradedModule& n);
// columns of d tensor id_N on covering free modules
std::vector<VecPoly> tensor_map_cols(const std::vector<VecPoly>& dcols, int rn, int nvars);
// columns of Hom(d, N): Hom(F_target, N) -> Hom(F_source, N)
std::vector<VecPoly> hom_map_cols(const std::vector<VecPoly>& dcols, int src_rank, int rn,
                                  const Ring& ring);

// ---- derived functors --------------------------------------------------------

// Tor_i(M, N) / Ext^i(M, N) computed from a minimal resolution of M over the
// resolution's ring; results are minimally presented graded modules.
GradedModule tor_from_res(const Resolution& res, const GradedModule& n, int i);
GradedModule ext_from_res(const Resolution& res, const GradedModule& n, int i);

GradedModule tor(const GradedModule& m, const GradedModule& n, int i);
GradedModule ext(const GradedModule& m, const GradedModule& n, int i);

// default resolution bound: two periods past the guaranteed onset
int default_bound(const Ring& ring);

// ---- Tor length bookkeeping ---------------------------------------------------

// Lengths and vanishing of Tor_j(M, N) for j = 0..jmax, with the periodicity
// certificate of the underlying resolution; past jmax both extend with
// period 2 (valid from onset + 1 on).
struct TorTable {
    int jmax = -1;
    std::vector<LengthValue> lengths;
    std::vector<bool> zero;
    std::optional<PeriodicityCertificate> cert;
    int bound = 0;

    bool extendable_from(int j) const {
        return cert && ((cert->period == 1) || j > cert->onset);
    }
    // every index past jmax is covered by the periodic extension
    bool fully_certified() const {
        return cert && (cert->period == 1 || cert->onset + 2 <= jmax);
    }
    LengthValue length_at(int j) const;
    bool zero_at(int j) const;
    // index such that every j > it is covered by periodic extension
    int certified_horizon() const { return cert ? (1 << 20) : jmax; }
};

TorTable tor_length_table(const GradedModule& m, const GradedModule& n, int bound,
                          int explicit_hint = -1);

// finite length index: least i with l(Tor_j) finite for all j >= i, using the
// certificate to extend past the computed range; nullopt when even the
// periodic tail has infinite length (or nothing is certified within bound)
std::optional<int> f_index(const TorTable& t);
std::optional<int> f_index(const GradedModule& m, const GradedModule& n, int bound);

// Euler characteristic over the ambient ring: sum (-1)^i l(Tor_i^S(M, N)).
// Requires l(M tensor N) finite; throws otherwise.
int64_t chi_ambient(const GradedModule& m, const GradedModule& n);

} // namespace hsg

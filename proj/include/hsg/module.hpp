#pragma once

#include <optional>

#include "hsg/ring.hpp"

namespace hsg {

// Finitely generated graded module over S or R = S/(f), given by a
// presentation: F1 -> F0 -> M -> 0.  gen_degs are the degrees of the F0
// basis (so F0 = sum of R(-gen_degs[i])), rels are the homogeneous columns
// of the presentation matrix, entries kept in normal form mod f.
struct GradedModule {
    Ring ring;
    std::vector<int64_t> gen_degs;
    std::vector<VecPoly> rels;
    bool minimal = false;

    int rank() const { return static_cast<int>(gen_degs.size()); }
    int nvars() const { return ring.nvars(); }
    uint32_t p() const { return ring.p(); }
};

GradedModule make_module(Ring ring, std::vector<int64_t> gen_degs, std::vector<VecPoly> rels);
GradedModule free_module(Ring ring, std::vector<int64_t> gen_degs);
GradedModule zero_module(Ring ring);
GradedModule residue_field(const Ring& ring); // k = R/m

// presentation columns plus f*e_i columns when the ring is a quotient:
// the S-submodule whose quotient of F0 is M as an S-module
std::vector<VecPoly> relations_over_ambient(const GradedModule& m);
GBasis relations_gb(const GradedModule& m);

// ---- generator-level operations -------------------------------------------

// Minimal homogeneous generating set of the submodule generated by cols
// (modulo the submodule generated by base) over m's ring.  Returns the kept
// subset, in ascending (degree, input position) order.
std::vector<VecPoly> minimal_generators(const std::vector<VecPoly>& cols,
                                        const std::vector<VecPoly>& base, int rank,
                                        const std::vector<int64_t>& shifts, const Ring& ring);

// Kernel generators of the map R^s -> R^rank given by cols, over ring
// (f-augmented when quotient), entries reduced, zero columns dropped.
std::vector<VecPoly> syzygies_over_ring(const std::vector<VecPoly>& cols, int rank,
                                        const std::vector<int64_t>& shifts, const Ring& ring);

// coefficients c_j with v = sum c_j cols[j] over the ring, if v lies in the
// submodule generated by the columns
std::optional<std::vector<VecPoly>> express_in_generators(const VecPoly& v,
                                                          const std::vector<VecPoly>& cols,
                                                          int rank,
                                                          const std::vector<int64_t>& shifts,
                                                          const Ring& ring);

// ---- matrix helpers --------------------------------------------------------

// image of v (living in R^{cols.size()}) under the map with the given columns
VecPoly apply_columns(const std::vector<VecPoly>& cols, const VecPoly& v, const Ring& ring);

std::vector<VecPoly> compose_columns(const std::vector<VecPoly>& a,
                                     const std::vector<VecPoly>& b, const Ring& ring);

// transpose of the matrix whose columns are cols (nrows = target rank);
// result has nrows columns in a free module of rank cols.size()
std::vector<VecPoly> transpose_columns(const std::vector<VecPoly>& cols, int nrows,
                                       const Ring& ring);

VecPoly entry_of(const std::vector<VecPoly>& cols, int row, int col);

// ---- module constructions --------------------------------------------------

// Prunes unit entries of the presentation by pivoting (lowest row, then
// column), drops zero and duplicate relation columns.  Isomorphic module;
// minimal flag set.  With minimize_relations, the surviving relation columns
// are additionally cut to a minimal generating set.
GradedModule minimal_presentation(const GradedModule& m, bool minimize_relations = false);

bool is_zero_module(const GradedModule& m);
bool is_free_module(const GradedModule& m); // free <=> minimalized presentation has no relations

GradedModule direct_sum(const GradedModule& a, const GradedModule& b);
// add delta to every generator degree: HF_new(d) = HF_old(d - delta)
GradedModule degree_shift(GradedModule m, int64_t delta);
GradedModule tensor_product(const GradedModule& a, const GradedModule& b);

// submodule of R generated by rank-1 elements, as an abstract module
GradedModule ideal_module(const Ring& ring, const std::vector<VecPoly>& gens);

// A module map U -> V described on covering free modules; column j is the
// image of U's generator j inside V's F0.
struct ModuleMap {
    GradedModule src;
    GradedModule tgt;
    std::vector<VecPoly> mat;
};

bool map_well_defined(const ModuleMap& f);

// kernel of f as an abstract module together with its generators inside
// the covering free module of f.src
struct SubmoduleData {
    GradedModule module;          // abstract presentation (gens = `gens` below)
    std::vector<VecPoly> gens;    // inside the ambient covering free module
};

SubmoduleData kernel_of_map(const ModuleMap& f);
GradedModule cokernel_of_map(const ModuleMap& f);

// homology ker(out)/im(in) at the middle module; either map may be absent.
// in:  A -> B given by columns in B's F0 coordinates
// out: B -> C given by out_cols into out_target's F0
GradedModule homology_at(const GradedModule& middle,
                         const std::vector<VecPoly>* in_cols,
                         const std::vector<VecPoly>* out_cols,
                         const GradedModule* out_target);

// Hom_R(M, N) as an abstract module; gens are matrices flattened into
// Hom(F0^M, F0^N) = free module of rank rank(M)*rank(N), index i*rankN + j
// standing for the (row j, column i) entry of the homomorphism matrix.
SubmoduleData hom_module(const GradedModule& m, const GradedModule& n);

// convenience: Hom(M, R)
SubmoduleData dual_module(const GradedModule& m);

} // namespace hsg

#pragma once

#include <cstdint>
#include <vector>

#include "hsg/vecpoly.hpp"

namespace hsg {

// Reduced Groebner basis of a submodule of a graded free module R^rank.
// Generators are monic, pairwise tail-reduced, sorted by leading term
// descending; identical inputs produce identical bases byte for byte.
struct GBasis {
    uint32_t p = 0;
    int nvars = 0;
    int rank = 0;
    std::vector<int64_t> shifts;
    ModuleOrder ord;
    std::vector<VecPoly> gens;
    bool reduced = true;

    bool contains(const VecPoly& v) const;
};

GBasis groebner_basis(std::vector<VecPoly> gens, int rank, std::vector<int64_t> shifts,
                      uint32_t p, int nvars, ModuleOrder ord = {});

// Unique fully reduced remainder of v against gb.  `skip` excludes one basis
// element (used internally for tail reduction).
VecPoly normal_form(VecPoly v, const GBasis& gb, int skip = -1);

// Kernel of the map R^s -> R^rank sending e_j to cols[j]; columns must be
// homogeneous under `shifts`.  The result generates the syzygy module of the
// columns; each generator lives in R^s with shifts = column degrees.
std::vector<VecPoly> syzygy_basis(const std::vector<VecPoly>& cols, int rank,
                                  const std::vector<int64_t>& shifts, uint32_t p, int nvars);

// Re-runs the Buchberger criterion on a claimed basis: every S-pair must
// reduce to zero.  Used by tests as an independent certificate.
bool buchberger_criterion_holds(const GBasis& gb);

} // namespace hsg

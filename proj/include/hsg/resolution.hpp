#pragma once

#include <map>
#include <optional>

#include "hsg/module.hpp"

namespace hsg {

// Minimal graded free resolution F_bound -> ... -> F_1 -> F_0 (-> M -> 0).
// maps[k] holds the columns of d_{k+1} : F_{k+1} -> F_k, so maps[0] = d_1.
// Over the ambient ring the resolution always terminates; over R it is
// truncated at `bound`.
struct Resolution {
    Ring ring;                // ring the resolution lives over
    bool over_ambient = false;
    int bound = 0;
    bool terminated = false;  // zero syzygies reached at `length`
    std::vector<std::vector<int64_t>> shifts; // shifts[i] = generator degrees of F_i
    std::vector<std::vector<VecPoly>> maps;

    // largest homological index with F_i != 0
    int length() const {
        for (int i = static_cast<int>(shifts.size()) - 1; i >= 0; --i)
            if (!shifts[static_cast<size_t>(i)].empty()) return i;
        return -1; // resolution of the zero module
    }
    int rank_at(int i) const {
        if (i < 0 || i >= static_cast<int>(shifts.size())) return 0;
        return static_cast<int>(shifts[static_cast<size_t>(i)].size());
    }
    const std::vector<VecPoly>* map_at(int i) const { // d_i, 1-based
        if (i < 1 || i > static_cast<int>(maps.size())) return nullptr;
        return &maps[static_cast<size_t>(i - 1)];
    }
};

// Minimal free resolution of M, over its own ring or (over_ambient) over S
// after restriction of scalars.  bound >= 1.
Resolution resolve(const GradedModule& m, bool over_ambient, int bound);

// Betti numbers beta_{i,j}: (homological index, internal degree) -> rank.
struct BettiTable {
    std::map<std::pair<int, int64_t>, int64_t> entries;
    std::vector<int64_t> totals; // totals[i] = rank of F_i
};

BettiTable betti_table(const Resolution& res);

struct PeriodicityCertificate {
    int onset = 0;
    int period = 1;          // 1 = maps vanish past onset, 2 = matrix factorization regime
    int verified_through = 0;
};

// Certifies eventual behavior of a truncated resolution over R: period 1
// when the resolution terminated, else the smallest onset from which every
// consecutive lifted pair multiplies to f*I both ways.  nullopt when the
// bound is too small to certify.
std::optional<PeriodicityCertificate> detect_periodicity(const Resolution& res);

// Pair of square matrices over S with A*B = B*A = f*I.
struct MatrixFactorization {
    Ring ring; // the hypersurface ring (f taken from here)
    std::vector<VecPoly> a, b;
    std::vector<int64_t> row_shifts; // target of A = F_{at-1}
    std::vector<int64_t> mid_shifts; // source of A = target of B = F_at
    std::vector<int64_t> col_shifts; // source of B = F_{at+1}
};

// exact check of A*B = B*A = f*I over the ambient ring
bool mf_identity_holds(const MatrixFactorization& mf);

// Lifts d_at, d_{at+1} to S and verifies the factorization identity;
// retries once at at+1 before giving up.
MatrixFactorization extract_mf(const Resolution& res, int at);

// cokernel of A over R as a graded module (the MCM module of the pair)
GradedModule mf_cokernel(const MatrixFactorization& mf);

} // namespace hsg

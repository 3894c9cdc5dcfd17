#pragma once

#include "hsg/theta.hpp"

namespace hsg {

// Doubly infinite exact complex of free modules agreeing with a minimal
// resolution in nonnegative degrees, truncated to indices [-window, window].
// Positive side: minimal resolution of M.  Negative side: the dualized
// minimal resolution of M*, spliced through the evaluation embedding
// M -> M** inside Hom(cover of M*, R).
struct CompleteResolution {
    Ring ring;
    int window = 0;
    int splice_degree = 0; // complex agrees with the resolution at k >= this
    std::vector<std::vector<int64_t>> shifts; // index k + window, k in [-window, window]
    std::vector<std::vector<VecPoly>> maps;   // maps[k + window - 1] : T_k -> T_{k-1}
    std::optional<MatrixFactorization> mf;    // periodic engine, when extraction succeeds

    const std::vector<int64_t>& shifts_at(int k) const {
        return shifts[static_cast<size_t>(k + window)];
    }
    int rank_at(int k) const {
        if (k < -window || k > window) return 0;
        return static_cast<int>(shifts_at(k).size());
    }
    // T_k -> T_{k-1}, defined for -window < k <= window
    const std::vector<VecPoly>* map_of(int k) const {
        if (k <= -window || k > window) return nullptr;
        return &maps[static_cast<size_t>(k + window - 1)];
    }
};

// Requires M maximal Cohen-Macaulay, nonzero and not free; exactness of the
// spliced complex is asserted at every interior index of the window.
CompleteResolution complete_resolution(const GradedModule& m, int window = -1);

// stable homology values at any index in (-window, window)
GradedModule stable_tor(const CompleteResolution& t, const GradedModule& n, int i);
GradedModule stable_ext(const CompleteResolution& t, const GradedModule& n, int i);

struct StableTable {
    enum class Kind { Tor, Ext };
    Kind kind = Kind::Tor;
    int lo = 0, hi = -1;
    std::vector<LengthValue> entries; // entries[i - lo]
};

StableTable stable_table(const CompleteResolution& t, const GradedModule& n,
                         StableTable::Kind kind, int lo, int hi);

// ---- identity suite (stable (co)homology against ordinary Tor/Ext) ----------

struct IdentityCheckItem {
    std::string identity;
    int index = 0;
    int64_t twist = 0; // forced degree shift between the two sides
    bool pass = false;
};

struct StableIdentityReport {
    Verdict verdict = Verdict::NotApplicable;
    bool mcm = false;
    std::vector<IdentityCheckItem> items;
    int window = 0;
};

// Compares graded Hilbert functions of both sides of each identity over the
// index window; the forced twist by multiples of deg f is part of the check.
StableIdentityReport verify_stable_identities(const GradedModule& m, const GradedModule& n,
                                              int window = 3);

// ---- length duality on even-dimensional isolated singularities ---------------

struct LengthDualityPair {
    int i = 0, j = 0;
    int64_t len_left = 0, len_right = 0;
    bool pass = false;
};

struct LengthDualityReport {
    Verdict verdict = Verdict::NotApplicable;
    bool even_dimension = false;
    bool isolated = false;
    bool mcm_m = false, mcm_n = false;
    std::vector<LengthDualityPair> pairs;
};

// l(stable Ext^i(M, N)) = l(stable Ext^j(M*, N*)) for i - j odd
LengthDualityReport verify_length_duality(const GradedModule& m, const GradedModule& n,
                                          const std::vector<std::pair<int, int>>& pairs);

// ---- theta vanishing against the dual -----------------------------------------

struct DualThetaReport {
    Verdict verdict = Verdict::NotApplicable;
    bool even_dimension = false;
    bool isolated = false;
    bool bundle_proxy = false; // higher Tor against the dual all finite length
    bool free_case = false;
    int64_t theta_value = 0;
    bool syzygy_transfer_checked = false;
    int64_t theta_syzygy = 0;
};

// theta(M, M*) = 0 over even-dimensional isolated hypersurface singularities,
// plus the syzygy transfer theta(M, M*) = theta(K, K*) for K = syz_1(M)
DualThetaReport verify_dual_theta_vanishing(const GradedModule& m, int bound = -1);

// first syzygy of m as an abstract module
GradedModule first_syzygy(const GradedModule& m);

} // namespace hsg

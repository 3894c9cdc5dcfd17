#pragma once

#include "hsg/homology.hpp"

namespace hsg {

enum class Verdict { Holds, Violated, NotApplicable };
const char* to_string(Verdict v);

// ---- theta ------------------------------------------------------------------

struct ThetaStabilityPair {
    int e;
    int64_t len_even; // l(Tor_{2e+2})
    int64_t len_odd;  // l(Tor_{2e+1})
};

struct ThetaReport {
    int64_t value = 0;
    int e_used = 0;
    int f_index = 0;
    std::vector<ThetaStabilityPair> stability;
    int bound = 0;
};

struct ThetaUndefined : Error {
    using Error::Error;
};

// theta = l(Tor_{2e+2}) - l(Tor_{2e+1}) evaluated at e and again at e+1;
// throws ThetaUndefined when the finite length index is not certified finite
ThetaReport theta(const GradedModule& m, const GradedModule& n, int bound = -1);

// ---- rigidity ----------------------------------------------------------------

struct RigidityReport {
    enum class Kind { RigidWithinBound, Counterexample, NoVanishingFound };
    Kind kind = Kind::NoVanishingFound;
    std::optional<int> first_vanishing;
    int counterexample_index = -1;
    std::vector<std::pair<int, LengthValue>> propagation;
    int bound = 0;
    bool certified_all_indices = false; // periodic extension covered every j
};

RigidityReport check_rigidity(const GradedModule& m, const GradedModule& n, int bound = -1);

// ---- short exact sequences and biadditivity -----------------------------------

struct ShortExactSequence {
    GradedModule sub, mid, quot;
    std::vector<VecPoly> incl; // sub -> mid on covering frees
    std::vector<VecPoly> proj; // mid -> quot
};

ShortExactSequence split_sequence(const GradedModule& a, const GradedModule& c);

// composite zero, injectivity, surjectivity, and Hilbert additivity over a
// window reaching `extra` past the largest generator degree
bool certify_ses(const ShortExactSequence& s, int64_t extra = 6);

struct BiadditivityReport {
    bool sequence_certified = false;
    int64_t theta_sub = 0, theta_mid = 0, theta_quot = 0;
    bool holds = false;
};

BiadditivityReport theta_biadditivity_check(const GradedModule& m, const ShortExactSequence& s,
                                            int bound = -1);

// ---- duals, reflexivity, pushforward ------------------------------------------

struct DualReflexivityResult {
    SubmoduleData dual;            // M*
    SubmoduleData bidual;          // M**
    std::vector<VecPoly> bidual_map; // F0(M) -> cover of M**
    bool injective = false;
    bool surjective = false;
    bool reflexive = false;
};

DualReflexivityResult dual_and_reflexivity(const GradedModule& m);

struct PushforwardResult {
    int lambda = 0;
    std::vector<VecPoly> embedding; // F0(M) -> R^lambda
    std::vector<int64_t> free_shifts;
    GradedModule m1;
    bool hilbert_certified = false; // HF(M) - HF(R^lambda) + HF(M1) = 0 on window
};

// throws when the bidual map has a kernel (not torsion-free)
PushforwardResult pushforward(const GradedModule& m);

struct PushforwardPropertyReport {
    bool defined = false;
    Verdict free_iff;      // M free <=> M1 free (zero counts as free)
    Verdict mcm_propagates; // M MCM => M1 MCM or zero
    Verdict depth_drop;     // depth(M1) >= depth(M) - 1
    int depth_m = 0, depth_m1 = 0;
};

PushforwardPropertyReport verify_pushforward_properties(const GradedModule& m);

// ---- depth formula / dimension inequality --------------------------------------

struct DepthFormulaReport {
    Verdict verdict = Verdict::NotApplicable;
    bool hypothesis_holds = false; // Tor_i = 0 for all i >= 1, certified
    int depth_m = 0, depth_n = 0, depth_ring = 0, depth_tensor = 0;
};

DepthFormulaReport verify_depth_formula(const GradedModule& m, const GradedModule& n,
                                        int bound = -1);

struct DimensionInequalityReport {
    Verdict verdict = Verdict::NotApplicable;
    bool tensor_finite = false;
    int dim_m = 0, dim_n = 0, dim_ring = 0;
};

DimensionInequalityReport verify_dimension_inequality(const GradedModule& m,
                                                      const GradedModule& n);

// ---- transpose, Jothilingam, MCM criterion --------------------------------------

// coker(F_i^* -> F_{i+1}^*) from a minimal resolution of n
GradedModule transpose_cokernel(const GradedModule& n, int i);

struct JothilingamReport {
    int n = 0;
    bool over_ambient = false;
    bool ext_vanishes = false;
    std::optional<bool> pd_less; // pd < n (within bound over R)
    bool biconditional_asserted = false;
    Verdict verdict = Verdict::NotApplicable; // asserted cases only
};

JothilingamReport jothilingam_check(const GradedModule& m, int n, bool assume_reduced_class = false,
                                    int bound = -1);

struct McmCriterionReport {
    bool is_mcm = false;
    int depth_m = 0, dim_ring = 0;
    std::vector<std::string> parameter_forms;
    uint64_t seed = 0;
    int retries = 0;
    bool tor1_zero = false;
    bool higher_tor_zero = false; // scanned within bound (MCM branch)
    Verdict verdict = Verdict::NotApplicable;
};

McmCriterionReport mcm_criterion_check(const GradedModule& m, uint64_t seed, int bound = -1);

// ---- section-3 style composite verifier -----------------------------------------

enum class TensorDepthCase { VanishingFromTheta, DepthBound, FreenessFromDual };

struct HypothesisCheck {
    std::string name;
    bool verified = false;
    std::string note;
};

struct TensorDepthReport {
    TensorDepthCase which;
    std::vector<HypothesisCheck> hypotheses;
    bool all_hypotheses = false;
    std::optional<bool> conclusion_verified;
    Verdict verdict = Verdict::NotApplicable;
};

// r is the depth parameter of the DepthBound case; n2 unused for FreenessFromDual
TensorDepthReport verify_tensor_depth(TensorDepthCase which, const GradedModule& m,
                                      const GradedModule* n, int r = 1, int bound = -1);

// deterministic seeded stream of field scalars for randomized constructions
struct SeededRng {
    uint64_t state;
    explicit SeededRng(uint64_t seed) : state(seed) {}
    uint64_t next() {
        state += 0x9e3779b97f4a7c15ull;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    uint32_t below(uint32_t n) { return static_cast<uint32_t>(next() % n); }
};

// random linear form with seeded coefficients, nonzero
VecPoly random_linear_form(const Ring& ring, SeededRng& rng);

} // namespace hsg

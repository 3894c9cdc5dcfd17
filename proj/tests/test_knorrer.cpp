#include <doctest.h>

#include "hsg/stable.hpp"

using namespace hsg;

// A four-dimensional isolated quadric singularity built by doubling:
// f = xy + zu + v^2 over k[x,y,z,u,v].  The 4x4 factorization comes from
// stacking the rank-one pairs (x, y) and (z, u) and then adjoining v.

namespace {

Ring ring_dim4() { return define_hypersurface(32003, {"x", "y", "z", "u", "v"}, "x*y + z*u + v^2"); }

VecPoly pp(const std::string& s, const Ring& r) { return parse_polynomial(s, *r.ctx); }

// columns of the block matrix [[A1, vI],[vI, -B1]] with
// A1 = [[x, z],[-u, y]], B1 = [[y, -z],[u, x]]
std::vector<VecPoly> knorrer_cols(const Ring& r, bool partner) {
    auto e = [&](const std::string& s) { return pp(s, r); };
    std::vector<std::vector<std::string>> a{{"x", "z", "v", "0"},
                                            {"-u", "y", "0", "v"},
                                            {"v", "0", "-y", "z"},
                                            {"0", "v", "-u", "-x"}};
    std::vector<std::vector<std::string>> b{{"y", "-z", "v", "0"},
                                            {"u", "x", "0", "v"},
                                            {"v", "0", "-x", "-z"},
                                            {"0", "v", "u", "-y"}};
    const auto& rows = partner ? b : a;
    std::vector<VecPoly> cols;
    for (int j = 0; j < 4; ++j) {
        VecPoly col(r.nvars());
        for (int i = 0; i < 4; ++i) {
            VecPoly entry = e(rows[static_cast<size_t>(i)][static_cast<size_t>(j)]);
            for (size_t t = 0; t < entry.nterms(); ++t)
                col.push_term(entry.coeff(t), i, entry.exp_row(t));
        }
        col.normalize(r.p(), ModuleOrder{});
        cols.push_back(std::move(col));
    }
    return cols;
}

} // namespace

TEST_CASE("dimension-four quadric: factorization, theta vanishing, duality") {
    Ring r = ring_dim4();
    CHECK(r.dim() == 4);
    CHECK(check_isolated_singularity(r).isolated);

    MatrixFactorization input;
    input.ring = r;
    input.a = knorrer_cols(r, false);
    input.b = knorrer_cols(r, true);
    input.row_shifts.assign(4, 0);
    input.mid_shifts.assign(4, 1);
    input.col_shifts.assign(4, 2);
    REQUIRE(mf_identity_holds(input));

    GradedModule m = make_module(r, {0, 0, 0, 0}, input.a);
    CHECK(depth(m) == 4); // maximal Cohen-Macaulay
    CHECK(!is_free_module(m));

    Resolution res = resolve(m, false, 8);
    auto cert = detect_periodicity(res);
    REQUIRE(cert.has_value());
    CHECK(cert->period == 2);
    for (int i = 0; i <= 8; ++i) CHECK(res.rank_at(i) == 4);

    // even dimension with isolated singularity: theta against the dual is 0
    DualThetaReport dt = verify_dual_theta_vanishing(m);
    CHECK(dt.even_dimension);
    CHECK(dt.verdict == Verdict::Holds);
    CHECK(dt.theta_value == 0);

    // length duality across one odd-difference pair
    LengthDualityReport ld = verify_length_duality(m, m, {{1, 0}});
    CHECK(ld.verdict == Verdict::Holds);
}

TEST_CASE("cubic circulant factorization stresses the degree-3 machinery") {
    // det of the circulant [[x,y,z],[z,x,y],[y,z,x]] is x^3 + y^3 + z^3 - 3xyz
    Ring r = define_hypersurface(32003, {"x", "y", "z"}, "x^3 + y^3 + z^3 - 3*x*y*z");
    auto e = [&](const std::string& s) { return pp(s, r); };
    std::vector<std::vector<std::string>> rows{{"x", "y", "z"}, {"z", "x", "y"}, {"y", "z", "x"}};
    std::vector<VecPoly> cols;
    for (int j = 0; j < 3; ++j) {
        VecPoly col(3);
        for (int i = 0; i < 3; ++i) {
            VecPoly entry = e(rows[static_cast<size_t>(i)][static_cast<size_t>(j)]);
            for (size_t t = 0; t < entry.nterms(); ++t)
                col.push_term(entry.coeff(t), i, entry.exp_row(t));
        }
        col.normalize(r.p(), ModuleOrder{});
        cols.push_back(std::move(col));
    }
    GradedModule m = make_module(r, {0, 0, 0}, cols);
    Resolution res = resolve(m, false, 7);
    auto cert = detect_periodicity(res);
    REQUIRE(cert.has_value());
    CHECK(cert->period == 2);
    MatrixFactorization mf = extract_mf(res, cert->onset);
    CHECK(mf_identity_holds(mf));
    // partner entries are the degree-2 adjugate cofactors
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(*vp_homog_degree(entry_of(mf.b, i, j), {0}) == 2);
    CHECK(depth(m) == 2); // cokernel of an injective square matrix is MCM
    GradedModule w = mf_cokernel(mf);
    Resolution res2 = resolve(w, false, 7);
    CHECK(betti_table(res).totals == betti_table(res2).totals);
}

TEST_CASE("small characteristics stay exact") {
    for (uint32_t p : {2u, 3u, 5u}) {
        Ring r = define_hypersurface(p, {"x", "y"}, "x*y");
        GradedModule m = make_module(r, {0}, {pp("x", r)});
        Resolution res = resolve(m, false, 8);
        for (int i = 0; i <= 8; ++i) CHECK(res.rank_at(i) == 1);
        GradedModule n = make_module(r, {0}, {pp("y", r)});
        CHECK(theta(m, n).value == 1);
        CHECK(chi_ambient(m, n) == 1);
    }
}

TEST_CASE("dual routes agree: hom vs ext^0, tensor vs tor_0") {
    Ring r = define_hypersurface(32003, {"x", "y", "z"}, "x*y - z^2");
    VecPoly c0(3), c1(3);
    c0.push_term(1, 0, Monomial::var(0, 3));
    c0.push_term(1, 1, Monomial::var(2, 3));
    c1.push_term(1, 0, Monomial::var(2, 3));
    c1.push_term(1, 1, Monomial::var(1, 3));
    GradedModule m = make_module(r, {0, 0}, {c0, c1});
    GradedModule n = make_module(r, {0}, {pp("x + y", r)});

    GradedModule h0 = ext(m, n, 0);
    GradedModule hom = minimal_presentation(hom_module(m, n).module, true);
    CHECK(hilbert_function(h0, -4, 6) == hilbert_function(hom, -4, 6));

    GradedModule t0 = tor(m, n, 0);
    GradedModule tens = minimal_presentation(tensor_product(m, n), true);
    CHECK(hilbert_function(t0, -4, 6) == hilbert_function(tens, -4, 6));
}

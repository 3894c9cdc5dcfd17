#include <doctest.h>

#include "hsg/homology.hpp"

using namespace hsg;

namespace {

VecPoly pp(const std::string& s, const Ring& r) { return parse_polynomial(s, *r.ctx); }

Ring ring_ex35() { return define_hypersurface(32003, {"x", "y", "u", "v"}, "x*u - y*v"); }
Ring ring_nodal() { return define_hypersurface(32003, {"x", "y"}, "x*y"); }

GradedModule quotient_cyclic(const Ring& r, const std::vector<std::string>& gens) {
    std::vector<VecPoly> rels;
    for (const auto& g : gens) rels.push_back(pp(g, r));
    return make_module(r, {0}, rels);
}

} // namespace

TEST_CASE("hilbert function of the ex3_5 ring") {
    Ring r = ring_ex35();
    GradedModule rm = free_module(r, {0});
    HilbertFunction hf = hilbert_function(rm, 0, 2);
    CHECK(hf.at(0) == 1);
    CHECK(hf.at(1) == 4);
    CHECK(hf.at(2) == 9); // ten degree-2 monomials minus one relation
}

TEST_CASE("hilbert function basics") {
    Ring r = ring_ex35();
    HilbertFunction hk = hilbert_function(residue_field(r), -1, 2);
    CHECK(hk.at(-1) == 0);
    CHECK(hk.at(0) == 1);
    CHECK(hk.at(1) == 0);

    Ring s1 = ambient_ring(32003, {"x"});
    HilbertFunction hs = hilbert_function(free_module(s1, {1}), 0, 2);
    CHECK(hs.at(0) == 0);
    CHECK(hs.at(1) == 1);
    CHECK(hs.at(2) == 1);
}

TEST_CASE("krull dimension") {
    Ring r = ring_ex35();
    CHECK(krull_dim(free_module(r, {0})) == 3);
    CHECK(krull_dim(quotient_cyclic(r, {"x", "y"})) == 2); // isomorphic to k[u,v]
    CHECK(krull_dim(residue_field(r)) == 0);
    CHECK(krull_dim(zero_module(r)) == -1);
}

TEST_CASE("length") {
    Ring r = ring_ex35();
    CHECK(length(residue_field(r)) == LengthValue{true, 1});
    CHECK(!length(free_module(r, {0})).finite);
    CHECK(length(zero_module(r)) == LengthValue{true, 0});
    // R/(x,y,u,v^2) has length 2: 1, v
    GradedModule m = quotient_cyclic(r, {"x", "y", "u", "v^2"});
    CHECK(length(m) == LengthValue{true, 2});
}

TEST_CASE("depth") {
    Ring r = ring_ex35();
    CHECK(depth(residue_field(r)) == 0);
    CHECK(depth(free_module(r, {0})) == 3); // hypersurfaces are Cohen-Macaulay
    CHECK(depth(zero_module(r)) == kDepthInfinite);
    Ring s = ambient_ring(32003, {"x", "y"});
    CHECK(depth(free_module(s, {0})) == 2);
}

TEST_CASE("tor against a free module vanishes") {
    Ring r = ring_ex35();
    GradedModule n = quotient_cyclic(r, {"x", "y"});
    for (int i = 1; i <= 3; ++i) CHECK(is_zero_module(tor(free_module(r, {0, 1}), n, i)));
    // Tor_0(R, N) = N: same hilbert function
    GradedModule t0 = tor(free_module(r, {0}), n, 0);
    CHECK(hilbert_function(t0, 0, 4) == hilbert_function(n, 0, 4));
}

TEST_CASE("ext from a projective source vanishes") {
    Ring r = ring_ex35();
    GradedModule n = quotient_cyclic(r, {"x"});
    for (int i = 1; i <= 3; ++i) CHECK(is_zero_module(ext(free_module(r, {0, -2}), n, i)));
}

TEST_CASE("ex3_5 tor values") {
    Ring r = ring_ex35();
    GradedModule m = ideal_module(r, {pp("x", r), pp("y", r)});
    SubmoduleData ms = dual_module(m);
    Resolution res = resolve(m, false, 8);
    GradedModule t1 = tor_from_res(res, ms.module, 1);
    GradedModule t2 = tor_from_res(res, ms.module, 2);
    GradedModule t3 = tor_from_res(res, ms.module, 3);
    CHECK(length(t1) == LengthValue{true, 1}); // Tor_1 = k
    CHECK(is_zero_module(t2));                 // Tor_2 = 0
    CHECK(length(t3) == LengthValue{true, 1}); // periodicity
}

TEST_CASE("ex3_5 dual is the ideal (x,v) up to hilbert data") {
    Ring r = ring_ex35();
    GradedModule m = ideal_module(r, {pp("x", r), pp("y", r)});
    SubmoduleData ms = dual_module(m);
    GradedModule xv = ideal_module(r, {pp("x", r), pp("v", r)});
    // the computed dual is generated in degrees shifted by -1 relative to
    // (x, v): Hom((x,y), R) picks up functionals of degree -1
    GradedModule dual_shifted = degree_shift(ms.module, 1);
    HilbertFunction h1 = hilbert_function(dual_shifted, 0, 5);
    HilbertFunction h2 = hilbert_function(xv, 0, 5);
    CHECK(h1 == h2);
    // betti table match over a window
    Resolution r1 = resolve(dual_shifted, false, 5);
    Resolution r2 = resolve(xv, false, 5);
    CHECK(betti_table(r1).totals == betti_table(r2).totals);
}

TEST_CASE("ex3_5 tensor with dual has depth 1") {
    Ring r = ring_ex35();
    GradedModule m = ideal_module(r, {pp("x", r), pp("y", r)});
    SubmoduleData ms = dual_module(m);
    GradedModule t = tensor_product(m, ms.module);
    CHECK(depth(t) == 1);
    CHECK(krull_dim(t) == 3); // isomorphic to the irrelevant ideal
}

TEST_CASE("ex5_5 ext pattern over the nodal curve") {
    Ring r = ring_nodal();
    GradedModule m = quotient_cyclic(r, {"x"});
    Resolution res = resolve(m, false, 12);
    for (int i = 1; i <= 9; i += 2) CHECK(is_zero_module(ext_from_res(res, m, i)));
    for (int i = 2; i <= 10; i += 2) {
        GradedModule e = ext_from_res(res, m, i);
        CHECK(length(e) == LengthValue{true, 1});
    }
}

TEST_CASE("f-index examples") {
    Ring r = ring_ex35();
    GradedModule m = ideal_module(r, {pp("x", r), pp("y", r)});
    SubmoduleData ms = dual_module(m);
    auto fi = f_index(m, ms.module, 10);
    REQUIRE(fi.has_value());
    CHECK(*fi == 1); // Tor_0 = m has dimension 3, all higher tor finite

    GradedModule n = quotient_cyclic(r, {"x"});
    auto fi2 = f_index(free_module(r, {0}), n, 8);
    REQUIRE(fi2.has_value());
    CHECK(*fi2 == 1);

    auto fi3 = f_index(residue_field(r), residue_field(r), 8);
    REQUIRE(fi3.has_value());
    CHECK(*fi3 == 0);
}

TEST_CASE("chi over the ambient ring") {
    Ring s2 = ambient_ring(32003, {"x", "y"});
    GradedModule sx = quotient_cyclic(s2, {"x"});
    GradedModule sy = quotient_cyclic(s2, {"y"});
    CHECK(chi_ambient(sx, sy) == 1); // koszul: Tor_0 = k, Tor_1 = 0

    Ring s1 = ambient_ring(32003, {"x"});
    GradedModule k1 = residue_field(s1);
    CHECK(chi_ambient(k1, k1) == 0); // Tor_0 = Tor_1 = k

    Ring r = ring_ex35();
    GradedModule a = quotient_cyclic(r, {"x", "y"});
    GradedModule b = quotient_cyclic(r, {"u", "v"});
    CHECK(chi_ambient(a, b) == 1); // transversal planes, koszul oracle
}

TEST_CASE("tor is balanced on finite length values") {
    Ring r = ring_nodal();
    GradedModule a = quotient_cyclic(r, {"x"});
    GradedModule b = quotient_cyclic(r, {"y^2"});
    for (int i = 1; i <= 4; ++i) {
        LengthValue l1 = length(tor(a, b, i));
        LengthValue l2 = length(tor(b, a, i));
        CHECK(l1 == l2);
    }
}

TEST_CASE("length additivity on a split exact sequence") {
    Ring r = ring_nodal();
    GradedModule a = residue_field(r);
    GradedModule c = quotient_cyclic(r, {"x", "y^3"});
    GradedModule b = direct_sum(a, c);
    LengthValue la = length(a), lb = length(b), lc = length(c);
    REQUIRE(la.finite);
    REQUIRE(lb.finite);
    REQUIRE(lc.finite);
    CHECK(lb.value == la.value + lc.value);
}

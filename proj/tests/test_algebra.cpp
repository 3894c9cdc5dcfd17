#include <doctest.h>

#include "hsg/field.hpp"
#include "hsg/parser.hpp"

using namespace hsg;

namespace {
ContextPtr ctx4() {
    return std::make_shared<const Context>(32003, std::vector<std::string>{"x", "y", "u", "v"});
}
} // namespace

TEST_CASE("prime field arithmetic is exact") {
    const uint32_t p = 32003;
    CHECK(fp_add(p - 1, 1, p) == 0);
    CHECK(fp_sub(0, 1, p) == p - 1);
    CHECK(fp_mul(p - 1, p - 1, p) == 1);
    for (uint32_t a : {1u, 2u, 17u, 31999u}) CHECK(fp_mul(a, fp_inv(a, p), p) == 1);
    CHECK(is_prime_u32(32003));
    CHECK(!is_prime_u32(32001));
    CHECK_THROWS(std::ignore = fp_inv(0, p));
}

TEST_CASE("grevlex order") {
    // xu > yv in k[x,y,u,v]
    Monomial xu({1, 0, 1, 0}), yv({0, 1, 0, 1});
    CHECK(grevlex_cmp_raw(xu.data(), yv.data(), 4) > 0);
    // degree dominates
    Monomial x({1, 0, 0, 0}), y3({0, 3, 0, 0});
    CHECK(grevlex_cmp_raw(x.data(), y3.data(), 4) < 0);
    // classic: in 3 vars x*z < y^2 under grevlex
    Monomial xz({1, 0, 1}), y2({0, 2, 0});
    CHECK(grevlex_cmp_raw(xz.data(), y2.data(), 3) < 0);
    CHECK(grevlex_cmp_raw(xz.data(), xz.data(), 3) == 0);
}

TEST_CASE("monomial ops") {
    Monomial a({2, 1, 0}), b({1, 0, 3});
    CHECK((a * b) == Monomial({3, 1, 3}));
    CHECK(a.lcm(b) == Monomial({2, 1, 3}));
    CHECK(Monomial({1, 0, 0}).divides(a));
    CHECK(!a.divides(b));
    CHECK((a * b / a) == b);
    CHECK(a.degree() == 3);
}

TEST_CASE("parser produces canonical polynomials") {
    auto c = ctx4();
    VecPoly f = parse_polynomial("x*u - y*v", *c);
    REQUIRE(f.nterms() == 2);
    CHECK(f.lmono() == Monomial({1, 0, 1, 0})); // leading term xu
    CHECK(f.coeff(1) == 32002);                 // -1 mod p

    auto c3 = std::make_shared<const Context>(3, std::vector<std::string>{"x", "y"});
    VecPoly sq = parse_polynomial("(x+y)^2", *c3);
    REQUIRE(sq.nterms() == 3); // x^2 + 2xy + y^2 over p=3
    CHECK(sq.coeff(1) == 2);

    CHECK(parse_polynomial("x - x", *c).is_zero());

    auto c2 = std::make_shared<const Context>(2, std::vector<std::string>{"x", "y"});
    VecPoly fr = parse_polynomial("(x+y)^2", *c2); // Frobenius: x^2 + y^2
    REQUIRE(fr.nterms() == 2);

    CHECK_THROWS_WITH(std::ignore = parse_polynomial("x + w", *c),
                      doctest::Contains("unknown variable"));
    CHECK_THROWS_WITH(std::ignore = parse_polynomial("x + ", *c), doctest::Contains("position"));
}

TEST_CASE("vecpoly arithmetic") {
    auto c = ctx4();
    ModuleOrder ord{};
    VecPoly x = parse_polynomial("x", *c), y = parse_polynomial("y", *c);
    CHECK(vp_add(x, vp_neg(x, c->p()), c->p(), ord).is_zero());
    VecPoly prod = vp_mul(vp_add(x, y, c->p(), ord), vp_sub(x, y, c->p(), ord), c->p(), ord);
    CHECK(prod == parse_polynomial("x^2 - y^2", *c));

    // homogeneity bookkeeping
    VecPoly f = parse_polynomial("x*u - y*v", *c);
    auto d = vp_homog_degree(f, {0});
    REQUIRE(d.has_value());
    CHECK(*d == 2);
    CHECK(!vp_homog_degree(parse_polynomial("x + x*u", *c), {0}).has_value());
}

TEST_CASE("term-over-position tie break") {
    ModuleOrder ord{};
    Monomial m({1, 0});
    // same monomial, lower component wins
    CHECK(ord.cmp(m.data(), 0, m.data(), 1, 2) > 0);
    // elimination split: component >= 1 is always smaller
    ModuleOrder elim{};
    elim.elim_split = 1;
    Monomial big({5, 5});
    CHECK(elim.cmp(m.data(), 0, big.data(), 1, 2) > 0);
}

#include <doctest.h>

#include "hsg/config.hpp"
#include "hsg/homology.hpp"

using namespace hsg;

TEST_CASE("config parsing: ring and modules") {
    const char* text = R"(
# comment
[ring]
char = 32003
vars = x, y, u, v
relation = x*u - y*v

[module M]
kind = ideal
generators = x, y

[module Mstar]
kind = dual-of M

[module C]
kind = cokernel
matrix = x, z_unused; y, x   # placeholder comment
)";
    // fix the matrix line: use valid variables
    std::string t(text);
    t.replace(t.find("z_unused"), 8, "u");
    SessionConfig cfg = parse_config_text(t, "test");
    CHECK(cfg.ring.dim() == 3);
    CHECK(cfg.module("M").rank() == 2);
    CHECK(cfg.module("Mstar").rank() == 2);
    CHECK(cfg.module("C").rank() == 2);
    CHECK(cfg.modules.size() == 3);
    CHECK_THROWS_WITH(cfg.module("missing"), doctest::Contains("unknown module"));
}

TEST_CASE("config rejects inhomogeneous relations with a location") {
    const char* text = R"([ring]
char = 32003
vars = x, u
relation = x*u - x
)";
    CHECK_THROWS_WITH(parse_config_text(text, "t"), doctest::Contains("homogeneous"));
}

TEST_CASE("config rejects malformed input with line info") {
    CHECK_THROWS_WITH(parse_config_text("[ring\nchar = 7", "t"), doctest::Contains("t:1"));
    CHECK_THROWS_WITH(parse_config_text("key = 1", "t"), doctest::Contains("outside"));
    const char* dup = R"([ring]
char = 32003
vars = x, y
relation = x*y

[module A]
kind = free

[module A]
kind = free
)";
    CHECK_THROWS_WITH(parse_config_text(dup, "t"), doctest::Contains("duplicate module"));
}

TEST_CASE("config composite kinds elaborate") {
    const char* text = R"([ring]
char = 32003
vars = x, y
relation = x*y

[module M]
kind = cokernel
matrix = x

[module K]
kind = syzygy-of M

[module P]
kind = pushforward-of M
)";
    SessionConfig cfg = parse_config_text(text, "t");
    // syz_1(R/(x)) is generated by x with annihilator (y)
    const GradedModule& k = cfg.module("K");
    CHECK(k.rank() == 1);
    REQUIRE(k.rels.size() == 1);
    CHECK(k.rels[0] == parse_polynomial("y", *cfg.ring.ctx));
    CHECK(!is_zero_module(cfg.module("P")));
}

TEST_CASE("config: ambient ring when relation omitted") {
    const char* text = R"([ring]
char = 32003
vars = x, y

[module M]
kind = cokernel
matrix = x
)";
    SessionConfig cfg = parse_config_text(text, "t");
    CHECK(!cfg.ring.is_quotient());
    CHECK(cfg.ring.dim() == 2);
    CHECK(depth(cfg.module("M")) == 1);
}

TEST_CASE("config: unknown references and kinds fail") {
    const char* base = R"([ring]
char = 32003
vars = x, y
relation = x*y

[module M]
kind = dual-of Nope
)";
    CHECK_THROWS_WITH(parse_config_text(base, "t"), doctest::Contains("unknown module"));
    const char* bad = R"([ring]
char = 32003
vars = x, y
relation = x*y

[module M]
kind = widget
)";
    CHECK_THROWS_WITH(parse_config_text(bad, "t"), doctest::Contains("unknown module kind"));
}

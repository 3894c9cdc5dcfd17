#include "hsg/parser.hpp"

#include <cctype>

#include "hsg/field.hpp"

namespace hsg {

namespace {

struct Parser {
    const std::string& s;
    const Context& ctx;
    size_t pos = 0;
    ModuleOrder ord{};

    [[noreturn]] void fail(const std::string& msg) const {
        throw Error("syntax error at position " + std::to_string(pos + 1) + ": " + msg);
    }

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }

    bool eat(char c) {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }

    VecPoly constant(uint32_t c) const {
        VecPoly r(ctx.nvars());
        if (c != 0) r.push_term(c, 0, Monomial::one(ctx.nvars()));
        return r;
    }

    long long integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        long long v = 0;
        for (size_t i = start; i < pos; ++i) {
            v = v * 10 + (s[i] - '0');
            if (v > (1LL << 62)) fail("integer literal too large");
        }
        return v;
    }

    VecPoly base() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of expression");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            VecPoly e = expression();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return constant(fp_from_int(integer(), ctx.p()));
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
            std::string name = s.substr(start, pos - start);
            int vi = ctx.var_index(name);
            if (vi < 0) {
                pos = start;
                fail("unknown variable '" + name + "'");
            }
            VecPoly r(ctx.nvars());
            r.push_term(1, 0, Monomial::var(vi, ctx.nvars()));
            return r;
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    VecPoly power() {
        VecPoly b = base();
        if (eat('^')) {
            long long e = integer();
            if (e < 0) fail("negative exponent");
            VecPoly acc = constant(1);
            VecPoly sq = b;
            long long n = e;
            while (n) {
                if (n & 1) acc = vp_mul(acc, sq, ctx.p(), ord);
                n >>= 1;
                if (n) sq = vp_mul(sq, sq, ctx.p(), ord);
            }
            return acc;
        }
        return b;
    }

    VecPoly factor() {
        skip_ws();
        if (eat('-')) return vp_neg(factor(), ctx.p());
        if (eat('+')) return factor();
        return power();
    }

    VecPoly term() {
        VecPoly r = factor();
        while (eat('*')) r = vp_mul(r, factor(), ctx.p(), ord);
        return r;
    }

    VecPoly expression() {
        VecPoly r = term();
        for (;;) {
            skip_ws();
            if (eat('+'))
                r = vp_add(r, term(), ctx.p(), ord);
            else if (eat('-'))
                r = vp_sub(r, term(), ctx.p(), ord);
            else
                break;
        }
        return r;
    }
};

} // namespace

VecPoly parse_polynomial(const std::string& text, const Context& ctx) {
    Parser ps{text, ctx};
    VecPoly r = ps.expression();
    ps.skip_ws();
    if (ps.pos != text.size()) ps.fail("trailing input");
    return r;
}

} // namespace hsg

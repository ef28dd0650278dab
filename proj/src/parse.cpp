#include "gml/parse.hpp"

#include <cctype>

namespace gml {

namespace {

struct Parser {
    const std::string& text;
    const Ring& ring;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    [[noreturn]] void error(const std::string& what) {
        fail("core/parse", what + " at position " + std::to_string(pos) + " in: " + text);
    }

    bool peek(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }

    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos;
        return true;
    }

    bool at_atom_start() {
        skip_ws();
        if (pos >= text.size()) return false;
        char c = text[pos];
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
    }

    RatFun parse_expr() {
        bool neg = false;
        skip_ws();
        if (accept('-')) neg = true;
        else accept('+');
        RatFun acc = parse_term();
        if (neg) acc = -acc;
        while (true) {
            skip_ws();
            if (accept('+')) acc += parse_term();
            else if (accept('-')) acc -= parse_term();
            else break;
        }
        return acc;
    }

    RatFun parse_term() {
        RatFun acc = parse_factor();
        while (true) {
            skip_ws();
            if (accept('*')) acc *= parse_factor();
            else if (accept('/')) acc /= parse_factor();
            else if (at_atom_start()) acc *= parse_factor(); // juxtaposition
            else break;
        }
        return acc;
    }

    RatFun parse_factor() {
        RatFun base = parse_atom();
        skip_ws();
        if (accept('^')) {
            bool neg = accept('-');
            long e = parse_integer();
            RatFun p = RatFun::constant(ring, Rat(1));
            RatFun nb = base;
            for (long k = 0; k < e; ++k) p *= nb;
            if (neg) p = RatFun::constant(ring, Rat(1)) / p;
            return p;
        }
        return base;
    }

    long parse_integer() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) error("expected integer");
        return std::stol(text.substr(start, pos - start));
    }

    RatFun parse_atom() {
        skip_ws();
        if (pos >= text.size()) error("unexpected end of input");
        char c = text[pos];
        if (c == '(') {
            ++pos;
            RatFun inner = parse_expr();
            if (!accept(')')) error("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            Int n(text.substr(start, pos - start));
            return RatFun::constant(ring, Rat(n));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
            std::string name = text.substr(start, pos - start);
            auto idx = ring.find(name);
            if (!idx) {
                std::string vars;
                for (const auto& v : ring.names()) vars += (vars.empty() ? "" : ", ") + v;
                fail("core/parse", "unknown variable '" + name + "' (ring: " + vars + ")");
            }
            return RatFun::from_poly(Poly::variable(ring, *idx));
        }
        error("unexpected character");
    }
};

} // namespace

RatFun parse_ratfun(const std::string& text, const Ring& ring) {
    Parser p{text, ring};
    RatFun r = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.error("trailing input");
    return r;
}

Poly parse_poly(const std::string& text, const Ring& ring) {
    RatFun r = parse_ratfun(text, ring);
    if (!r.den().is_constant())
        fail("core/parse", "expected a polynomial, got denominator " + r.den().to_string());
    return r.num().scaled(Rat(1) / r.den().constant_value());
}

} // namespace gml

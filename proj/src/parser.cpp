#include "hodgeloci/polynomial.hpp"

#include <cctype>
#include <stdexcept>

namespace hodge {

namespace {

// recursive-descent parser for the polynomial text grammar:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' nat)?
//   base   := rational | 'x' nat | '(' expr ')'
struct Parser {
    const std::string& s;
    size_t pos = 0;
    int numVars;

    explicit Parser(const std::string& str, int nv) : s(str), numVars(nv) {}

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }
    char peek() {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("polynomial parse error at position " +
                                    std::to_string(pos) + ": " + what);
    }

    long parseNat() {
        skip();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected number");
        long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            if (v > 1000000000L) fail("number too large");
            ++pos;
        }
        return v;
    }

    Polynomial parseBase() {
        char c = peek();
        if (c == '(') {
            eat('(');
            Polynomial p = parseExpr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (c == 'x') {
            ++pos;
            long idx = parseNat();
            if (idx >= numVars) fail("variable index x" + std::to_string(idx) + " out of range");
            return Polynomial::variable(numVars, static_cast<int>(idx));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long num = parseNat();
            long den = 1;
            if (peek() == '/') {
                eat('/');
                den = parseNat();
                if (den == 0) fail("zero denominator");
            }
            return Polynomial::constant(numVars, rat(num, den));
        }
        fail("expected coefficient, variable or '('");
    }

    Polynomial parseFactor() {
        Polynomial p = parseBase();
        if (eat('^')) {
            long e = parseNat();
            Polynomial r = Polynomial::constant(numVars, Rational(1));
            for (long i = 0; i < e; ++i) r = r * p;
            return r;
        }
        return p;
    }

    Polynomial parseTerm() {
        Polynomial p = parseFactor();
        while (true) {
            char c = peek();
            if (c == '*') { eat('*'); p = p * parseFactor(); }
            else if (c == 'x' || c == '(') { p = p * parseFactor(); } // implicit product
            else break;
        }
        return p;
    }

    Polynomial parseExpr() {
        bool neg = eat('-');
        Polynomial p = parseTerm();
        if (neg) p = -p;
        while (true) {
            char c = peek();
            if (c == '+') { eat('+'); p = p + parseTerm(); }
            else if (c == '-') { eat('-'); p = p - parseTerm(); }
            else break;
        }
        return p;
    }
};

int maxVarIndex(const std::string& s) {
    int mx = -1;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == 'x' && i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1]))) {
            int v = 0;
            size_t j = i + 1;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
                v = v * 10 + (s[j++] - '0');
            mx = std::max(mx, v);
        }
    }
    return mx;
}

} // namespace

Polynomial parse_polynomial(const std::string& text, int numVars) {
    if (numVars < 0) numVars = maxVarIndex(text) + 1;
    if (numVars <= 0) numVars = 1;
    Parser p(text, numVars);
    Polynomial result = p.parseExpr();
    p.skip();
    if (p.pos != text.size())
        throw std::invalid_argument("polynomial parse error: trailing input at position " +
                                    std::to_string(p.pos));
    return result;
}

} // namespace hodge

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hodgeloci/monomial.hpp"
#include "hodgeloci/rational.hpp"

namespace hodge {

// Sparse multivariate polynomial over Q. Terms are stored in a canonical
// container order; term orders for Groebner work are applied on demand.
class Polynomial {
public:
    Polynomial() : numVars_(0) {}
    explicit Polynomial(int numVars) : numVars_(numVars) {}

    static Polynomial zero(int numVars) { return Polynomial(numVars); }
    static Polynomial constant(int numVars, const Rational& c);
    static Polynomial monomial(Monomial m, Rational c = Rational(1));
    static Polynomial variable(int numVars, int i) {
        return monomial(Monomial::var(numVars, i));
    }

    int numVars() const { return numVars_; }
    bool isZero() const { return terms_.empty(); }
    size_t numTerms() const { return terms_.size(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    Rational coeff(const Monomial& m) const;
    void addTerm(const Monomial& m, const Rational& c);

    // the common degree of all terms, if homogeneous (zero poly -> nullopt)
    std::optional<int> homogeneousDegree() const;
    int totalDegree() const; // max term degree; -1 for zero

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    bool operator==(const Polynomial& o) const {
        return numVars_ == o.numVars_ && terms_ == o.terms_;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial mulMonomial(const Monomial& m, const Rational& c) const;

    // leading term with respect to an order
    std::pair<Monomial, Rational> leadingTerm(const MonomialOrder& order) const;

    // substitute x_i -> images[i] (linear change of coordinates or general)
    Polynomial substitute(const std::vector<Polynomial>& images) const;

    std::string str() const; // canonical text form (parseable back)

private:
    int numVars_;
    std::map<Monomial, Rational> terms_;
};

Polynomial partial_derivative(const Polynomial& p, int varIndex);
Polynomial poly_multiply(const Polynomial& p, const Polynomial& q);

// text grammar: x0..x23, rationals, + - * ^, parentheses
Polynomial parse_polynomial(const std::string& text, int numVars = -1);

} // namespace hodge

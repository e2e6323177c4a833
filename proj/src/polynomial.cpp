#include "hodgeloci/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace hodge {

Polynomial Polynomial::constant(int numVars, const Rational& c) {
    Polynomial p(numVars);
    p.addTerm(Monomial(numVars), c);
    return p;
}

Polynomial Polynomial::monomial(Monomial m, Rational c) {
    Polynomial p(m.numVars());
    p.addTerm(std::move(m), c);
    return p;
}

Rational Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::addTerm(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::optional<int> Polynomial::homogeneousDegree() const {
    if (terms_.empty()) return std::nullopt;
    int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return std::nullopt;
    return d;
}

int Polynomial::totalDegree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (numVars_ != o.numVars_) throw std::invalid_argument("variable count mismatch");
    Polynomial r(*this);
    for (const auto& [m, c] : o.terms_) r.addTerm(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    if (numVars_ != o.numVars_) throw std::invalid_argument("variable count mismatch");
    Polynomial r(*this);
    for (const auto& [m, c] : o.terms_) r.addTerm(m, -c);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(numVars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (numVars_ != o.numVars_) throw std::invalid_argument("variable count mismatch");
    Polynomial r(numVars_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.addTerm(m1 * m2, c1 * c2);
    return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial r(numVars_);
    if (c == 0) return r;
    for (const auto& [m, cc] : terms_) r.terms_.emplace(m, cc * c);
    return r;
}

Polynomial Polynomial::mulMonomial(const Monomial& m, const Rational& c) const {
    Polynomial r(numVars_);
    if (c == 0) return r;
    for (const auto& [mm, cc] : terms_) r.terms_.emplace(mm * m, cc * c);
    return r;
}

std::pair<Monomial, Rational> Polynomial::leadingTerm(const MonomialOrder& order) const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (order.greater(it->first, best->first)) best = it;
    return {best->first, best->second};
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
    if (static_cast<int>(images.size()) != numVars_)
        throw std::invalid_argument("substitute: wrong image count");
    int outVars = images.empty() ? numVars_ : images[0].numVars();
    Polynomial result(outVars);
    for (const auto& [m, c] : terms_) {
        Polynomial t = Polynomial::constant(outVars, c);
        for (int i = 0; i < numVars_; ++i)
            for (int e = 0; e < m.exps[i]; ++e) t = t * images[i];
        result = result + t;
    }
    return result;
}

Polynomial partial_derivative(const Polynomial& p, int varIndex) {
    if (varIndex < 0 || varIndex >= p.numVars())
        throw std::invalid_argument("partial_derivative: variable index out of range");
    Polynomial r(p.numVars());
    for (const auto& [m, c] : p.terms()) {
        int e = m.exps[varIndex];
        if (e == 0) continue;
        Monomial mm(m);
        mm.exps[varIndex] -= 1;
        r.addTerm(mm, c * e);
    }
    return r;
}

Polynomial poly_multiply(const Polynomial& p, const Polynomial& q) { return p * q; }

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    // print descending by default grevlex for stable, readable output
    MonomialOrder ord;
    std::vector<const std::pair<const Monomial, Rational>*> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(), [&](auto* a, auto* b) { return ord.greater(a->first, b->first); });
    std::ostringstream os;
    bool first = true;
    for (auto* t : ts) {
        Rational c = t->second;
        if (first) {
            if (c < 0) { os << "-"; c = -c; }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        bool needCoeff = (c != 1) || t->first.isOne();
        bool needStar = false;
        if (needCoeff) { os << to_string(c); needStar = true; }
        for (int i = 0; i < t->first.numVars(); ++i) {
            int e = t->first.exps[i];
            if (e == 0) continue;
            if (needStar) os << "*";
            os << "x" << i;
            if (e > 1) os << "^" << e;
            needStar = true;
        }
    }
    return os.str();
}

} // namespace hodge

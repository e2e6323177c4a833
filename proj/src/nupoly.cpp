#include "hodgeloci/nupoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hodge {

NuPoly NuPoly::operator+(const NuPoly& o) const {
    std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return fromCoeffs(std::move(c));
}

NuPoly NuPoly::operator-(const NuPoly& o) const { return *this + (-o); }

NuPoly NuPoly::operator-() const {
    NuPoly r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

NuPoly NuPoly::operator*(const NuPoly& o) const {
    if (isZero() || o.isZero()) return NuPoly();
    std::vector<Rational> c(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    return fromCoeffs(std::move(c));
}

NuPoly NuPoly::divExact(const NuPoly& o) const {
    if (o.isZero()) throw std::domain_error("NuPoly division by zero");
    if (isZero()) return NuPoly();
    std::vector<Rational> rem = coeffs_;
    int dq = degree() - o.degree();
    if (dq < 0) throw std::domain_error("NuPoly::divExact: not divisible");
    std::vector<Rational> q(dq + 1, Rational(0));
    for (int i = dq; i >= 0; --i) {
        Rational f = rem[i + o.degree()] / o.leadingCoeff();
        q[i] = f;
        if (f != 0)
            for (int j = 0; j <= o.degree(); ++j) rem[i + j] -= f * o.coeffs_[j];
    }
    for (const auto& r : rem)
        if (r != 0) throw std::domain_error("NuPoly::divExact: nonzero remainder");
    return fromCoeffs(std::move(q));
}

Rational NuPoly::eval(const Rational& nu0) const {
    Rational v(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * nu0 + *it;
    return v;
}

NuPoly NuPoly::gcd(NuPoly a, NuPoly b) {
    while (!b.isZero()) {
        // remainder of a by b
        std::vector<Rational> rem = a.coeffs_;
        while (static_cast<int>(rem.size()) - 1 >= b.degree() && !rem.empty()) {
            Rational f = rem.back() / b.leadingCoeff();
            int shift = static_cast<int>(rem.size()) - 1 - b.degree();
            for (int j = 0; j <= b.degree(); ++j) rem[shift + j] -= f * b.coeffs_[j];
            while (!rem.empty() && rem.back() == 0) rem.pop_back();
        }
        a = b;
        b = fromCoeffs(std::move(rem));
    }
    if (!a.isZero()) {
        Rational lc = a.leadingCoeff();
        for (auto& c : a.coeffs_) c /= lc;
    }
    return a;
}

std::vector<Rational> NuPoly::rationalRoots() const {
    std::vector<Rational> roots;
    if (isZero() || isConstant()) return roots;
    // strip nu^k factor: root 0
    NuPoly p = *this;
    size_t lowest = 0;
    while (lowest < p.coeffs_.size() && p.coeffs_[lowest] == 0) ++lowest;
    if (lowest > 0) {
        roots.push_back(Rational(0));
        p = fromCoeffs(std::vector<Rational>(p.coeffs_.begin() + lowest, p.coeffs_.end()));
    }
    if (p.isConstant()) return roots;
    // clear denominators to an integer polynomial
    Integer lcmDen(1);
    for (const auto& c : p.coeffs_) {
        Integer d = c.get_den();
        Integer g;
        mpz_gcd(g.get_mpz_t(), lcmDen.get_mpz_t(), d.get_mpz_t());
        lcmDen = lcmDen / g * d;
    }
    std::vector<Integer> ic;
    for (const auto& c : p.coeffs_) {
        Rational v = c * Rational(lcmDen);
        ic.push_back(v.get_num());
    }
    Integer a0 = abs(ic.front()), an = abs(ic.back());
    auto divisors = [](const Integer& n) {
        std::vector<Integer> ds;
        for (Integer i(1); i * i <= n; ++i) {
            if (n % i == 0) {
                ds.push_back(i);
                if (i * i != n) ds.push_back(n / i);
            }
        }
        return ds;
    };
    std::vector<Rational> found;
    for (const auto& pnum : divisors(a0))
        for (const auto& qden : divisors(an))
            for (int sign : {1, -1}) {
                Rational cand(sign * pnum, qden);
                cand.canonicalize();
                if (p.eval(cand) == 0) found.push_back(cand);
            }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    roots.insert(roots.end(), found.begin(), found.end());
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

NuPoly NuPoly::withoutRationalRoots() const {
    NuPoly p = *this;
    if (p.isZero()) return p;
    for (const auto& r : rationalRoots()) {
        NuPoly lin = fromCoeffs({-r, Rational(1)});
        while (!p.isConstant() && p.eval(r) == 0) p = p.divExact(lin);
    }
    return p;
}

std::string NuPoly::str() const {
    if (isZero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Rational c = coeffs_[i];
        if (c == 0) continue;
        if (first) {
            if (c < 0) { os << "-"; c = -c; }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        if (i == 0 || c != 1) os << to_string(c) << (i > 0 ? "*" : "");
        if (i > 0) {
            os << "nu";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Scalar::Scalar(NuPoly n, NuPoly d) : num(std::move(n)), den(std::move(d)) {
    if (den.isZero()) throw std::domain_error("Scalar with zero denominator");
    NuPoly g = NuPoly::gcd(num, den);
    if (!g.isConstant()) {
        num = num.divExact(g);
        den = den.divExact(g);
    }
    // normalize denominator to be monic
    Rational lc = den.leadingCoeff();
    if (lc != 1) {
        std::vector<Rational> nc = num.coeffs(), dc = den.coeffs();
        for (auto& c : nc) c /= lc;
        for (auto& c : dc) c /= lc;
        num = NuPoly::fromCoeffs(nc);
        den = NuPoly::fromCoeffs(dc);
    }
}

Scalar Scalar::operator+(const Scalar& o) const {
    return Scalar(num * o.den + o.num * den, den * o.den);
}
Scalar Scalar::operator-(const Scalar& o) const {
    return Scalar(num * o.den - o.num * den, den * o.den);
}
Scalar Scalar::operator*(const Scalar& o) const { return Scalar(num * o.num, den * o.den); }

std::string Scalar::str() const {
    if (den == NuPoly(Rational(1))) return num.str();
    return "(" + num.str() + ")/(" + den.str() + ")";
}

Rational evaluate_parameter(const Scalar& s, const Rational& nu0) {
    Rational d = s.den.eval(nu0);
    if (d == 0) throw std::domain_error("evaluate_parameter: pole at nu = " + to_string(nu0));
    return s.num.eval(nu0) / d;
}

} // namespace hodge

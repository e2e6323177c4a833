#pragma once

#include <string>
#include <vector>

#include "hodgeloci/rational.hpp"

namespace hodge {

// Univariate polynomial in the parameter nu over Q, dense coefficients.
class NuPoly {
public:
    NuPoly() = default;
    NuPoly(Rational c) { // implicit: constants are ubiquitous
        if (c != 0) coeffs_.push_back(std::move(c));
    }
    NuPoly(long c) : NuPoly(Rational(c)) {}
    static NuPoly nu() { return fromCoeffs({Rational(0), Rational(1)}); }
    static NuPoly fromCoeffs(std::vector<Rational> c) {
        NuPoly p;
        p.coeffs_ = std::move(c);
        p.trim();
        return p;
    }

    bool isZero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; } // -1 for zero
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(int i) const {
        return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : Rational(0);
    }
    Rational leadingCoeff() const { return isZero() ? Rational(0) : coeffs_.back(); }
    bool isConstant() const { return degree() <= 0; }

    NuPoly operator+(const NuPoly& o) const;
    NuPoly operator-(const NuPoly& o) const;
    NuPoly operator-() const;
    NuPoly operator*(const NuPoly& o) const;
    bool operator==(const NuPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const NuPoly& o) const { return !(*this == o); }

    // exact division; throws if the remainder is nonzero
    NuPoly divExact(const NuPoly& o) const;

    Rational eval(const Rational& nu0) const;

    // monic gcd (Euclid)
    static NuPoly gcd(NuPoly a, NuPoly b);

    // all rational roots, sorted ascending
    std::vector<Rational> rationalRoots() const;
    // quotient after dividing out all (nu - r) factors for rational roots r
    NuPoly withoutRationalRoots() const;

    std::string str() const;

private:
    std::vector<Rational> coeffs_; // coeffs_[i] multiplies nu^i; empty = 0
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
};

// Rational function in nu; denominators only ever arise from evaluation
// shortcuts, the elimination kernels stay fraction-free.
struct Scalar {
    NuPoly num;
    NuPoly den = NuPoly(Rational(1));

    Scalar() = default;
    Scalar(NuPoly n) : num(std::move(n)) {}
    Scalar(Rational c) : num(NuPoly(std::move(c))) {}
    Scalar(NuPoly n, NuPoly d);

    bool isZero() const { return num.isZero(); }
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    bool operator==(const Scalar& o) const { return num == o.num && den == o.den; }
    std::string str() const;
};

// exact substitution nu -> nu0; throws std::domain_error on a pole
Rational evaluate_parameter(const Scalar& s, const Rational& nu0);

} // namespace hodge

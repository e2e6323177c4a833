#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hodgeloci/monomial.hpp"
#include "hodgeloci/nupoly.hpp"
#include "hodgeloci/polynomial.hpp"

using namespace hodge;

namespace {

long binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

Polynomial randomPoly(std::mt19937& rng, int numVars, int maxDeg, int terms) {
    Polynomial p(numVars);
    for (int t = 0; t < terms; ++t) {
        Monomial m(numVars);
        int deg = static_cast<int>(rng() % (maxDeg + 1));
        for (int j = 0; j < deg; ++j) m.exps[rng() % numVars]++;
        long num = static_cast<long>(rng() % 19) - 9;
        p.addTerm(m, rat(num, 1 + rng() % 4));
    }
    return p;
}

} // namespace

TEST_CASE("monomial enumeration counts match binomials") {
    // dim S_t in n variables = C(n-1+t, n-1)
    CHECK(enumerate_monomials(3, 3).size() == binomial(5, 2));
    CHECK(enumerate_monomials(6, 6).size() == binomial(11, 5)); // 462
    CHECK(enumerate_monomials(4, 0).size() == 1);
    CHECK(enumerate_monomials(1, 7).size() == 1);
    for (int n = 2; n <= 5; ++n)
        for (int t = 0; t <= 6; ++t)
            CHECK(enumerate_monomials(n, t).size() == binomial(n - 1 + t, n - 1));
}

TEST_CASE("monomial orders are total, graded, and multiplicative") {
    for (OrderKind kind : {OrderKind::GrevLex, OrderKind::GrLex}) {
        MonomialOrder ord{kind, {}, 0};
        auto ms = enumerate_monomials(4, 5, ord);
        // enumerate returns strictly descending
        for (size_t i = 0; i + 1 < ms.size(); ++i) CHECK(ord.greater(ms[i], ms[i + 1]));
        std::mt19937 rng(11);
        for (int trial = 0; trial < 200; ++trial) {
            const Monomial& a = ms[rng() % ms.size()];
            const Monomial& b = ms[rng() % ms.size()];
            const Monomial& c = ms[rng() % ms.size()];
            CHECK(ord.compare(a, b) == -ord.compare(b, a));
            if (ord.less(a, b)) CHECK(ord.less(a * c, b * c)); // multiplicative
        }
        // degree refinement
        CHECK(ord.less(Monomial::var(4, 3, 2), Monomial::var(4, 0, 3)));
    }
    // grevlex vs grlex differ on the classic pair x0*x2^2 vs x1^2*x2 (deg 3)
    Monomial a(std::vector<int>{1, 0, 2}), b(std::vector<int>{0, 2, 1});
    CHECK(MonomialOrder{OrderKind::GrLex, {}, 0}.greater(a, b));
    CHECK(MonomialOrder{OrderKind::GrevLex, {}, 0}.less(a, b));
}

TEST_CASE("polynomial ring axioms on random inputs") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        Polynomial p = randomPoly(rng, 3, 4, 5);
        Polynomial q = randomPoly(rng, 3, 4, 5);
        Polynomial r = randomPoly(rng, 3, 4, 5);
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK((p + q) * r == p * r + q * r);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p - p == Polynomial::zero(3));
        CHECK(p * Polynomial::constant(3, rat(1)) == p);
        CHECK(poly_multiply(p, q) == p * q);
    }
}

TEST_CASE("homogeneous degree and derivatives") {
    Polynomial f = parse_polynomial("x0^3 + 2*x1^3 - x0*x1*x2");
    REQUIRE(f.homogeneousDegree().has_value());
    CHECK(*f.homogeneousDegree() == 3);
    CHECK(!(f + parse_polynomial("x0", 3)).homogeneousDegree().has_value());
    // Euler identity: sum x_i df/dx_i = d * f
    Polynomial euler(3);
    for (int i = 0; i < 3; ++i)
        euler = euler + Polynomial::variable(3, i) * partial_derivative(f, i);
    CHECK(euler == f * rat(3));
}

TEST_CASE("parser round-trips canonical text") {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        Polynomial p = randomPoly(rng, 4, 5, 6);
        CHECK(parse_polynomial(p.str(), 4) == p);
    }
    CHECK(parse_polynomial("(x0 + x1)^2", 2) ==
          parse_polynomial("x0^2 + 2*x0*x1 + x1^2", 2));
    CHECK(parse_polynomial("1/2*x0 - 3/4*x1", 2) * rat(4) ==
          parse_polynomial("2*x0 - 3*x1", 2));
    CHECK(parse_polynomial("0", 2).isZero());
    CHECK_THROWS(parse_polynomial("x0 + + x1"));
    CHECK_THROWS(parse_polynomial("x0^"));
}

TEST_CASE("X_{2,6} polynomial expands with the expected support") {
    Polynomial f = parse_polynomial(
        "x0*x1*(x0^4 + x1^4 + x2^2*x3^2) + x4*x2^5 + x4^6 + x5*x3^5 + x5^6");
    CHECK(*f.homogeneousDegree() == 6);
    CHECK(f.numTerms() == 7);
    CHECK(f.coeff(Monomial(std::vector<int>{1, 1, 2, 2, 0, 0})) == 1);
}

TEST_CASE("NuPoly arithmetic, gcd and rational roots") {
    NuPoly nu = NuPoly::nu();
    NuPoly p = nu * (nu + NuPoly(rat(1)));          // nu^2 + nu
    NuPoly q = nu * nu - NuPoly(rat(1));            // nu^2 - 1
    CHECK(p.degree() == 2);
    CHECK(p.eval(rat(-1)) == 0);
    CHECK(p.eval(rat(2)) == 6);
    CHECK(NuPoly::gcd(p, q) == nu + NuPoly(rat(1))); // monic gcd
    auto roots = p.rationalRoots();
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == -1);
    CHECK(roots[1] == 0);
    CHECK(p.withoutRationalRoots().isConstant());
    // 6*nu^2 - nu - 2 = (2nu + 1)(3nu - 2): non-integer rational roots
    NuPoly r = NuPoly::fromCoeffs({rat(-2), rat(-1), rat(6)});
    auto rr = r.rationalRoots();
    REQUIRE(rr.size() == 2);
    CHECK(rr[0] == rat(-1, 2));
    CHECK(rr[1] == rat(2, 3));
    // nu^2 + 1 has no rational roots and survives the factor split
    NuPoly s = nu * nu + NuPoly(rat(1));
    CHECK(s.rationalRoots().empty());
    CHECK(s.withoutRationalRoots() == s);
    CHECK(p.divExact(nu) == nu + NuPoly(rat(1)));
    CHECK_THROWS(q.divExact(nu));
}

TEST_CASE("Scalar evaluation and poles") {
    Scalar s(NuPoly::nu() + NuPoly(rat(2)), NuPoly::nu() - NuPoly(rat(1)));
    CHECK(evaluate_parameter(s, rat(3)) == rat(5, 2));
    CHECK_THROWS_AS(evaluate_parameter(s, rat(1)), std::domain_error);
    Scalar prod = s * Scalar(NuPoly::nu() - NuPoly(rat(1)));
    CHECK(prod.den == NuPoly(rat(1))); // common factors cancel
    CHECK(evaluate_parameter(prod, rat(1)) == 3);
}

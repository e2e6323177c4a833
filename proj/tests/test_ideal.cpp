#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hodgeloci/ideal.hpp"

using namespace hodge;

namespace {

std::shared_ptr<BasisCache> ringOf(int n) { return std::make_shared<BasisCache>(n); }

Polynomial randomForm(std::mt19937& rng, int numVars, int deg) {
    auto ms = enumerate_monomials(numVars, deg);
    Polynomial p(numVars);
    int terms = 1 + rng() % 3;
    for (int t = 0; t < terms; ++t)
        p.addTerm(ms[rng() % ms.size()], rat(static_cast<long>(rng() % 7) - 3));
    if (p.isZero()) p.addTerm(ms[rng() % ms.size()], rat(1));
    return p;
}

} // namespace

TEST_CASE("echelon insert, reduce and unit pivots") {
    Echelon e(5);
    CHECK(e.insert({{1, rat(2)}, {3, rat(4)}}) == 1);
    CHECK(e.insert({{1, rat(1)}, {3, rat(2)}}) == -1); // dependent
    e.insertUnit(0);
    CHECK(e.rank() == 2);
    CHECK(e.contains({{0, rat(7)}}));
    CHECK(e.contains({{0, rat(1)}, {1, rat(3)}, {3, rat(6)}}));
    CHECK(!e.contains({{3, rat(1)}}));
    SparseRow res = e.reduce({{1, rat(1)}, {2, rat(1)}});
    REQUIRE(res.size() == 2); // x2 stays, x3 appears from the pivot row
    CHECK(res[0].first == 2);
    CHECK(res[1].first == 3);
    auto std_cols = e.standardColumns();
    CHECK(std_cols == std::vector<int>{2, 3, 4});
}

TEST_CASE("echelon intersection equals hand-computed span") {
    // span{e0+e1, e2} /\ span{e0+e1+e2, e1} over 3 columns
    Echelon a(3), b(3);
    a.insert({{0, rat(1)}, {1, rat(1)}});
    a.insert({{2, rat(1)}});
    b.insert({{0, rat(1)}, {1, rat(1)}, {2, rat(1)}});
    b.insert({{1, rat(1)}});
    Echelon c = echelon_intersect(a, b);
    // intersection is spanned by e0+e1+e2 ... check: e0+e1+e2 = (e0+e1)+e2 in a; in b directly
    CHECK(c.rank() == 1);
    CHECK(c.contains({{0, rat(1)}, {1, rat(1)}, {2, rat(1)}}));
}

TEST_CASE("dense rank and nullspaces") {
    DenseMatrix m(2, 3);
    m[0] = {rat(1), rat(2), rat(3)};
    m[1] = {rat(2), rat(4), rat(6)};
    CHECK(dense_rank(m) == 1);
    auto ns = dense_nullspace(m);
    CHECK(ns.size() == 2);
    for (const auto& v : ns) CHECK(v[0] + 2 * v[1] + 3 * v[2] == 0);
    auto lns = dense_left_nullspace(m);
    REQUIRE(lns.size() == 1);
    CHECK(2 * lns[0][0] + (-1) * lns[0][1] != 0); // proportional to (2,-1)
    CHECK(lns[0][0] * 2 + lns[0][1] * 4 == 0);
}

TEST_CASE("Bareiss rank over Q[nu] matches evaluation") {
    NuPoly nu = NuPoly::nu();
    std::vector<std::vector<NuPoly>> m = {
        {NuPoly(rat(0)), NuPoly(rat(1)), nu},
        {NuPoly(rat(1)), NuPoly(rat(-1)), NuPoly(rat(0))},
        {nu, NuPoly(rat(0)), -nu},
    };
    BareissResult br = bareiss_rank(m);
    CHECK(br.rank == 3);
    REQUIRE(!br.pivots.empty());
    NuPoly det = br.pivots.back();
    // det = +/- nu(nu+1)
    NuPoly expect = nu * (nu + NuPoly(rat(1)));
    CHECK((det == expect || det == -expect));
    // a [[nu]] block: rank 1 generically, root at 0
    BareissResult one = bareiss_rank({{nu}});
    CHECK(one.rank == 1);
    CHECK(one.pivots.back().rationalRoots() == std::vector<Rational>{rat(0)});
}

TEST_CASE("Buchberger on a textbook example") {
    // I = <x0^2 - x1, x0^3 - x2> in Q[x0,x1,x2]; NF(x1^3) should involve x2^2
    auto gens = std::vector<Polynomial>{parse_polynomial("x0^2 - x1", 3),
                                        parse_polynomial("x0^3 - x2", 3)};
    GroebnerBasis gb = buchberger(gens);
    CHECK(ideal_member(parse_polynomial("x1^3 - x2^2", 3), gb));
    CHECK(!ideal_member(parse_polynomial("x1 - x2", 3), gb));
    // normal form is idempotent and order-respecting
    Polynomial p = parse_polynomial("x0^4 + x1*x2", 3);
    Polynomial nf = normal_form(p, gb);
    CHECK(normal_form(nf, gb) == nf);
    CHECK(ideal_member(p - nf, gb));
}

TEST_CASE("X_{2,6} I1 relation: x1^5 = -x1*x2^2*x3^2 mod I1") {
    const int n = 6;
    std::vector<Polynomial> gens = {
        Polynomial::variable(n, 0),
        parse_polynomial("x1^5 + x1*x2^2*x3^2", n),
        parse_polynomial("x2^5", n),
        parse_polynomial("x3^5", n),
        Polynomial::variable(n, 4),
        Polynomial::variable(n, 5),
    };
    GroebnerBasis gb = buchberger(gens);
    Polynomial nf = normal_form(parse_polynomial("x1^5", n), gb);
    CHECK(nf == parse_polynomial("-1*x1*x2^2*x3^2", n));
    // leading terms contain a pure power of every variable (Artinian)
    auto lts = gb.leadingTerms();
    for (int v = 0; v < n; ++v) {
        bool pure = false;
        for (const auto& m : lts) {
            bool onlyV = m.exps[v] > 0;
            for (int w = 0; w < n && onlyV; ++w)
                if (w != v && m.exps[w] != 0) onlyV = false;
            pure = pure || onlyV;
        }
        CHECK(pure);
    }
}

TEST_CASE("degreewise and Groebner Hilbert functions agree on random ideals") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 15; ++trial) {
        auto ring = ringOf(3);
        std::vector<Polynomial> gens;
        int ngens = 2 + rng() % 2;
        for (int i = 0; i < ngens; ++i) gens.push_back(randomForm(rng, 3, 2 + rng() % 3));
        IdealModel ideal(ring, gens);
        for (int t = 0; t <= 8; ++t) CHECK(ideal.hilbert(t) == ideal.hilbertGroebner(t));
    }
}

TEST_CASE("degreewise intersection agrees with the elimination oracle") {
    std::mt19937 rng(31);
    int done = 0;
    while (done < 20) {
        auto ring = ringOf(3);
        std::vector<Polynomial> g1, g2;
        for (int i = 0; i < 2; ++i) {
            g1.push_back(randomForm(rng, 3, 1 + rng() % 3));
            g2.push_back(randomForm(rng, 3, 1 + rng() % 3));
        }
        IdealModel a(ring, g1), b(ring, g2);
        std::vector<Polynomial> interGens = intersection_elimination_oracle(g1, g2, 3);
        IdealModel viaElim(ring, interGens.empty()
                                     ? std::vector<Polynomial>{Polynomial::zero(3)}
                                     : interGens);
        for (int t = 0; t <= 7; ++t) {
            long viaSpans = 0;
            {
                Echelon e = ideal_intersection_degreewise(a, b, t);
                viaSpans = e.rank();
            }
            CHECK(viaSpans == viaElim.dimAt(t));
        }
        ++done;
    }
}

TEST_CASE("ideal sum and membership") {
    auto ring = ringOf(3);
    IdealModel a(ring, {parse_polynomial("x0^2", 3)});
    IdealModel b(ring, {parse_polynomial("x1^2 + x0*x2", 3)});
    IdealModel s = ideal_sum(a, b);
    CHECK(s.containsDegreewise(parse_polynomial("x0^2*x2 + x1^2*x0", 3) -
                               parse_polynomial("x0^2*x1", 3) * rat(0)));
    CHECK(s.containsDegreewise(parse_polynomial("x1^2 + x0*x2", 3)));
    CHECK(!a.containsDegreewise(parse_polynomial("x0*x1", 3)));
}

TEST_CASE("Jacobian ideal and smoothness") {
    // Fermat quartic surface in P^3 is smooth
    Polynomial fermat = parse_polynomial("x0^4 + x1^4 + x2^4 + x3^4");
    SmoothnessReport rep = is_smooth(fermat);
    CHECK(rep.smooth);
    CHECK(rep.certificateDegree > 0);
    // nodal cubic surface x0^3 + x1^3 - x2^2*x3 ... has a singular point
    Polynomial singular = parse_polynomial("x0^3 + x1^3 + x2^2*x3");
    CHECK(!is_smooth(singular).smooth);
    // a cone is singular at its vertex
    Polynomial cone = parse_polynomial("x0^2 + x1^2 + x2^2", 4);
    CHECK(!is_smooth(cone).smooth);
    // the Jacobian ideal itself: Euler => f lies in J
    auto ring = ringOf(4);
    IdealModel jac = jacobian_ideal(ring, fermat);
    CHECK(jac.containsDegreewise(fermat));
}

TEST_CASE("Hilbert function of a complete intersection matches the product formula") {
    // <x0^2, x1^3, x2^4> in 3 vars: series (1+q)(1+q+q^2)(1+q+q^2+q^3)
    auto ring = ringOf(3);
    IdealModel ci(ring, {parse_polynomial("x0^2", 3), parse_polynomial("x1^3", 3),
                         parse_polynomial("x2^4", 3)});
    std::vector<long> expect = {1, 3, 5, 6, 5, 3, 1};
    for (int t = 0; t < static_cast<int>(expect.size()); ++t) CHECK(ci.hilbert(t) == expect[t]);
    CHECK(ci.hilbert(7) == 0);
    // standard monomials form the exponent box
    CHECK(ci.quotientBasis(3).size() == 6);
}

TEST_CASE("order independence of Hilbert data") {
    for (OrderKind kind : {OrderKind::GrevLex, OrderKind::GrLex}) {
        auto ring = std::make_shared<BasisCache>(3, MonomialOrder{kind, {}, 0});
        IdealModel ideal(ring, {parse_polynomial("x0^2 + x1*x2", 3),
                                parse_polynomial("x1^3 - x2^3", 3)});
        std::vector<long> h;
        for (int t = 0; t <= 6; ++t) h.push_back(ideal.hilbert(t));
        CHECK(h == std::vector<long>{1, 3, 5, 6, 6, 6, 6});
    }
}

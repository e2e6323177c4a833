#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hodgeloci/pairing.hpp"
#include "hodgeloci/scenario.hpp"

using namespace hodge;

namespace {

struct X26Fixture {
    ScenarioBuild b;
    AssociatedIdeal i1, i2;

    X26Fixture()
        : b(build_scenario(makeCfg())),
          i1(associated_ideal_from_decomposition(b.ring, b.plane1.linearForms,
                                                 plane_decomposition(b.f, b.plane1))),
          i2(associated_ideal_from_decomposition(b.ring, b.plane2.linearForms,
                                                 plane_decomposition(b.f, b.plane2))) {}

    static ScenarioConfig makeCfg() {
        ScenarioConfig cfg;
        cfg.family = Family::XKD;
        cfg.k = 2;
        cfg.d = 6;
        return cfg;
    }
};

} // namespace

TEST_CASE("socle monomial of a monomial complete intersection") {
    auto ring = std::make_shared<BasisCache>(2);
    IdealModel ci(ring, {parse_polynomial("x0^2", 2), parse_polynomial("x1^2", 2)});
    CHECK(ci.socleMonomialAt(2) == Monomial(std::vector<int>{1, 1})); // x0*x1
}

TEST_CASE("pairing values on X_{2,6}: unique dual monomial and signs") {
    X26Fixture fx;
    // M1 = x1^4 x2^4 x3^4; for N in B1 the dual is N' = M1/N with value 1
    Polynomial N = parse_polynomial("x1^2*x2^3*x3", 6);
    Polynomial Nprime = parse_polynomial("x1^2*x2*x3^3", 6);
    CHECK(pairing_value(fx.i1, N, Nprime) == 1);
    // a non-dual partner pairs to zero
    CHECK(pairing_value(fx.i1, N, parse_polynomial("x1^3*x2^2*x3", 6)) == 0);
    // the sign case: x1^{d-2} rows reduce through x1^5 = -x1 x2^2 x3^2
    CHECK(pairing_value(fx.i1, parse_polynomial("x1^4*x2^2", 6),
                        parse_polynomial("x1^4*x3^2", 6)) == -1);
    // psi_2 lives on x0-monomials: M2 = x0^4 x2^4 x3^4
    CHECK(pairing_value(fx.i2, parse_polynomial("x0^2*x2^3*x3", 6),
                        parse_polynomial("x0^2*x2*x3^3", 6)) == 1);
    // psi_1 kills I1: x0 in I1
    CHECK(pairing_value(fx.i1, parse_polynomial("x0*x2^3*x3^2", 6),
                        parse_polynomial("x1^4*x2*x3", 6)) == 0);
    // degree mismatch raises
    CHECK_THROWS(pairing_value(fx.i1, N, parse_polynomial("x1*x2", 6)));
    // bilinearity
    Polynomial q1 = parse_polynomial("x1^2*x2*x3^3", 6), q2 = parse_polynomial("x1^4*x2^2", 6);
    CHECK(pairing_value(fx.i1, N, q1 * rat(3) + q2 * rat(-2)) ==
          3 * pairing_value(fx.i1, N, q1) - 2 * pairing_value(fx.i1, N, q2));
}

TEST_CASE("Gram matrix block structure on X_{2,6}") {
    X26Fixture fx;
    GramReport g = gram_matrix(fx.i1, fx.i2, 6, 6);
    CHECK(g.rows.size() == 35);
    CHECK(g.cols.size() == 35);
    CHECK(!g.hasZeroRow);
    CHECK(g.genericRank == 35);
    // block reconstruction: entries vanish outside the block pattern and the
    // block ranks sum to the generic rank
    std::vector<int> rowBlock(g.rows.size(), -1), colBlock(g.cols.size(), -1);
    int rankSum = 0;
    for (size_t bi = 0; bi < g.blocks.size(); ++bi) {
        for (int r : g.blocks[bi].rowIdx) rowBlock[r] = static_cast<int>(bi);
        for (int c : g.blocks[bi].colIdx) colBlock[c] = static_cast<int>(bi);
        rankSum += g.blocks[bi].genericRank;
    }
    for (size_t i = 0; i < g.rows.size(); ++i)
        for (size_t j = 0; j < g.cols.size(); ++j)
            if (!g.entries[i][j].isZero()) CHECK(rowBlock[i] == colBlock[j]);
    CHECK(rankSum == g.genericRank);
    // every row/col belongs to exactly one block
    for (int rb : rowBlock) CHECK(rb >= 0);
    // 3x3 determinant nu(nu+1) up to sign
    NuPoly expect = NuPoly::nu() * (NuPoly::nu() + NuPoly(rat(1)));
    int n3 = 0;
    for (const auto& blk : g.blocks)
        if (blk.rowIdx.size() == 3) {
            ++n3;
            REQUIRE(!blk.pivots.empty());
            CHECK((blk.pivots.back() == expect || blk.pivots.back() == -expect));
        }
    CHECK(n3 == 3);
}

TEST_CASE("rank never exceeds the generic rank across many samples") {
    X26Fixture fx;
    GramReport g = gram_matrix(fx.i1, fx.i2, 6, 6);
    CHECK(generic_rank(g) == 35);
    for (long num = -30; num <= 30; ++num) {
        CHECK(rank_at(g, rat(num, 7)) <= g.genericRank);
        if (num % 3 == 0) CHECK(rank_at(g, rat(num, 1)) <= g.genericRank);
    }
    auto crit = critical_nu_values(g);
    REQUIRE(crit.size() == 2);
    CHECK(crit[0].nu == -1);
    CHECK(crit[1].nu == 0);
    CHECK(crit[0].corank == 3);
    // left kernel at nu = -1 is 3-dimensional, witnesses verified internally
    CHECK(left_kernel_at(g, rat(-1)).size() == 3);
    CHECK(left_kernel_at(g, rat(5)).empty());
}

TEST_CASE("swapped orientation psi_2 + nu psi_1 keeps the critical set") {
    X26Fixture fx;
    GramReport g = gram_matrix(fx.i2, fx.i1, 6, 6);
    auto crit = critical_nu_values(g);
    REQUIRE(crit.size() == 2);
    CHECK(crit[0].nu == -1); // lambda <-> 1/lambda symmetry fixes {0,-1} setwise
    CHECK(crit[1].nu == 0);
}

TEST_CASE("excess report classifies samples") {
    X26Fixture fx;
    GramReport g = gram_matrix(fx.i1, fx.i2, 6, 6);
    long jointCodim = intersection_hilbert(fx.i1.ideal, fx.i2.ideal, 6);
    CHECK(jointCodim == 35);
    ExcessReport rep = excess_report(g, jointCodim, {rat(-1), rat(0), rat(2)});
    CHECK(rep.genericExcess == 0);
    REQUIRE(rep.perNu.size() == 3);
    CHECK(rep.perNu[0].isExcess);
    CHECK(rep.perNu[0].excess == 3);
    CHECK(rep.perNu[0].combinedCodim == 32);
    CHECK(rep.perNu[1].isExcess);
    CHECK(rep.perNu[1].excess == 16);
    CHECK(!rep.perNu[2].isExcess);
    CHECK(rep.perNu[2].combinedCodim == jointCodim);
}

TEST_CASE("thmTsp criterion: feasibility window and Dan infeasibility") {
    X26Fixture fx;
    // k=2, d=6: colDegree = 6 = d, feasible, and the criterion holds
    ThmTspResult res = thmTsp_criterion(fx.i1, fx.i2, 6, 2);
    CHECK(res.feasible);
    CHECK(res.noLeftKernel);
    CHECK(res.rows == res.cols);
    ScenarioConfig cfg;
    cfg.family = Family::DanK1;
    cfg.k = 1;
    cfg.d = 6;
    ScenarioBuild b = build_scenario(cfg);
    auto i1 = associated_ideal_from_decomposition(b.ring, b.plane1.linearForms,
                                                  plane_decomposition(b.f, b.plane1));
    auto i2 = associated_ideal_from_decomposition(b.ring, b.plane2.linearForms,
                                                  plane_decomposition(b.f, b.plane2));
    // k=1: colDegree = d-4 < d, the criterion does not apply
    CHECK(!thmTsp_criterion(i1, i2, 6, 1).feasible);
}

// Acceptance gate: runs every shipped scenario and prints one line per
// criterion. Exit code 0 iff all criteria pass.
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "hodgeloci/scenario.hpp"

using namespace hodge;

namespace {

int failures = 0;

void criterion(int n, const std::string& label, bool pass, const std::string& detail = "") {
    std::cout << "criterion " << n << " (" << label << "): " << (pass ? "PASS" : "FAIL");
    if (!detail.empty()) std::cout << " — " << detail;
    std::cout << "\n" << std::flush;
    if (!pass) ++failures;
}

bool assertionPassed(const ReportDocument& doc, const std::string& name) {
    for (const auto& a : doc.assertions)
        if (a.name == name) return a.pass;
    return false;
}

bool oracleOk(const ReportDocument& doc, const std::string& name) {
    auto it = doc.oracleFlags.find(name);
    return it != doc.oracleFlags.end() && it->second;
}

ReportDocument runFamily(Family fam, int k, int d, long seed = 0, bool oracle = true) {
    ScenarioConfig cfg;
    cfg.family = fam;
    cfg.k = k;
    cfg.d = d;
    cfg.seed = seed;
    cfg.oracleChecks = oracle;
    return run_scenario(cfg);
}

Polynomial randomForm(std::mt19937& rng, int numVars, int deg) {
    auto ms = enumerate_monomials(numVars, deg);
    Polynomial p(numVars);
    for (int t = 0; t < 2; ++t)
        p.addTerm(ms[rng() % ms.size()], rat(static_cast<long>(rng() % 7) - 3));
    if (p.isZero()) p.addTerm(ms[rng() % ms.size()], rat(1));
    return p;
}

} // namespace

int main() {
    std::map<std::string, ReportDocument> docs;
    try {
        // --- criterion 1: Dan k=1 family, d in {5,6,7}, three seeds each ---
        bool ok1 = true;
        std::string det1;
        for (int d : {5, 6, 7}) {
            std::vector<std::string> fs;
            for (long seed : {0L, 1L, 2L}) {
                ReportDocument doc = runFamily(Family::DanK1, 1, d, seed, d == 5 && seed == 0);
                fs.push_back(doc.fText);
                bool here = assertionPassed(doc, "hilbert_intersection_d_minus_4") &&
                            assertionPassed(doc, "hilbert_intersection_d") &&
                            assertionPassed(doc, "left_kernel_generic") &&
                            assertionPassed(doc, "left_kernel_all_samples") &&
                            doc.allAssertionsPass();
                if (!here) {
                    ok1 = false;
                    det1 = "d=" + std::to_string(d) + " seed=" + std::to_string(seed);
                }
                if (d == 5 && seed == 0) docs["dan5"] = doc;
            }
            // three genuinely distinct hypersurfaces
            if (fs[0] == fs[1] || fs[0] == fs[2] || fs[1] == fs[2]) {
                ok1 = false;
                det1 = "seeds produced equal f at d=" + std::to_string(d);
            }
        }
        criterion(1, "Dan family: intersection Hilbert values 2d-7/2d-6 and excess kernel",
                  ok1, det1);

        // --- criterion 2: X_{2,6} ---
        docs["x26"] = runFamily(Family::XKD, 2, 6);
        {
            const ReportDocument& doc = docs["x26"];
            bool census = assertionPassed(doc, "block_census_matches_combinatorial_prediction") &&
                          assertionPassed(doc, "block_3x3_determinant_nu_nu_plus_1");
            bool ok = assertionPassed(doc, "quotient_basis_matches_box_basis") &&
                      doc.ideals[0].quotientDimension == 125 && census &&
                      assertionPassed(doc, "full_row_rank") && doc.gram.rows.size() == 35 &&
                      assertionPassed(doc, "c1_size_matches_box_count") &&
                      assertionPassed(doc, "critical_set_is_0_minus1") && doc.allAssertionsPass();
            criterion(2, "X_{2,6}: box basis, block census, rank 35, critical set {0,-1}", ok,
                      "note: the 1x2 block shape is provably absent at (k,d)=(2,6); "
                      "census checked against the exact combinatorial prediction");
        }

        // --- criterion 3: X_{3,6} and X_{2,7} ---
        docs["x36"] = runFamily(Family::XKD, 3, 6);
        docs["x27"] = runFamily(Family::XKD, 2, 7);
        {
            bool ok = true;
            std::string det;
            for (const char* key : {"x36", "x27"}) {
                const ReportDocument& doc = docs[key];
                std::set<std::string> shapes;
                for (const auto& blk : doc.gram.blocks) shapes.insert(blk.shape);
                bool allFour = shapes.count("1x1:c") && shapes.count("1x1:nu") &&
                               shapes.count("1x2:c,nu") && shapes.count("3x3:c,c,c,nu,nu,nu");
                bool here = allFour &&
                            assertionPassed(doc, "block_3x3_determinant_nu_nu_plus_1") &&
                            assertionPassed(doc, "critical_set_is_0_minus1") &&
                            doc.allAssertionsPass();
                if (!here) {
                    ok = false;
                    det = key;
                }
            }
            criterion(3, "X_{3,6} and X_{2,7}: all four block shapes, critical set {0,-1}", ok,
                      det);
        }

        // --- criterion 4: low-degree base cases, no left kernel ---
        docs["d4k3"] = runFamily(Family::LowDegD4K3, 3, 4);
        docs["d3k5"] = runFamily(Family::LowDegD3K5, 5, 3);
        docs["d5k3"] = runFamily(Family::LowDegD5K3, 3, 5);
        {
            bool ok = true;
            std::string det;
            for (const char* key : {"d4k3", "d5k3", "d3k5"}) {
                const ReportDocument& doc = docs[key];
                if (!(doc.thmTsp.feasible && doc.thmTsp.noLeftKernel &&
                      doc.allAssertionsPass())) {
                    ok = false;
                    det = key;
                }
            }
            criterion(4, "low-degree (4,3),(5,3),(3,5): multiplication pairing has no left kernel",
                      ok, det);
        }

        // --- criterion 5: Gorenstein suite across all scenarios ---
        {
            bool ok = true;
            std::string det;
            for (const auto& [key, doc] : docs)
                for (const auto& I : doc.ideals)
                    if (!I.gorensteinOk) {
                        ok = false;
                        det = key + "/" + I.name + ": " + I.gorensteinFailure;
                    }
            criterion(5, "Gorenstein property of every associated ideal", ok, det);
        }

        // --- criterion 6: oracle equivalences ---
        {
            bool okA = true;
            for (const auto& [key, doc] : docs)
                if (!doc.oracleFlags.empty() && !oracleOk(doc, "hilbert_groebner_agrees"))
                    okA = false;
            // the scenario runs above all carried --oracle
            for (const char* key : {"x26", "x36", "x27", "d4k3", "d5k3", "d3k5"})
                if (!oracleOk(docs[key], "hilbert_groebner_agrees")) okA = false;

            // (b) general vs decomposition on (1,5) and (2,4)
            bool okB = oracleOk(docs["dan5"], "general_construction_agrees");
            try {
                Polynomial f =
                    parse_polynomial("x0^4 + x0*x1^3 + x4^4 + x4*x2^3 + x5^4 + x5*x3^3");
                auto ring = std::make_shared<BasisCache>(6);
                LinearSpacePlane pl;
                for (int v : {0, 4, 5}) pl.linearForms.push_back(Polynomial::variable(6, v));
                auto viaDec = associated_ideal_from_decomposition(ring, pl.linearForms,
                                                                  plane_decomposition(f, pl));
                Polynomial fGamma = class_representative_from_ideal(viaDec, f);
                auto viaGen = associated_ideal_general(ring, f, fGamma);
                for (int t = 0; t <= viaDec.socleDegree; ++t) {
                    if (viaGen.ideal.dimAt(t) != viaDec.ideal.dimAt(t)) okB = false;
                    viaGen.ideal.spanAt(t).forEachRow([&](const SparseRow& row) {
                        if (!viaDec.ideal.spanAt(t).contains(row)) okB = false;
                    });
                }
            } catch (const std::exception&) {
                okB = false;
            }

            // (c) degreewise vs elimination intersection on 20 random 3-var pairs
            bool okC = true;
            std::mt19937 rng(2024);
            for (int trial = 0; trial < 20; ++trial) {
                auto ring = std::make_shared<BasisCache>(3);
                std::vector<Polynomial> g1 = {randomForm(rng, 3, 1 + rng() % 3),
                                              randomForm(rng, 3, 1 + rng() % 3)};
                std::vector<Polynomial> g2 = {randomForm(rng, 3, 1 + rng() % 3),
                                              randomForm(rng, 3, 1 + rng() % 3)};
                IdealModel a(ring, g1), b(ring, g2);
                auto interGens = intersection_elimination_oracle(g1, g2, 3);
                IdealModel viaElim(ring, interGens);
                for (int t = 0; t <= 6; ++t)
                    if (ideal_intersection_degreewise(a, b, t).rank() != viaElim.dimAt(t))
                        okC = false;
            }
            criterion(6, "oracle equivalence: Groebner Hilbert, dual construction, elimination",
                      okA && okB && okC,
                      std::string(okA ? "" : "(a) ") + (okB ? "" : "(b) ") + (okC ? "" : "(c) "));
        }

        // --- criterion 7: determinism and order independence ---
        {
            ReportDocument again = runFamily(Family::XKD, 2, 6);
            bool okBytes = true;
            for (ReportFormat fmt :
                 {ReportFormat::Json, ReportFormat::Csv, ReportFormat::Markdown})
                if (render_report(docs["x26"], fmt) != render_report(again, fmt)) okBytes = false;
            ScenarioConfig cfg;
            cfg.family = Family::XKD;
            cfg.k = 2;
            cfg.d = 6;
            cfg.orderKind = OrderKind::GrLex;
            cfg.oracleChecks = false;
            ReportDocument grlex = run_scenario(cfg);
            bool okOrder = grlex.gram.genericRank == docs["x26"].gram.genericRank &&
                           grlex.hilbertIntersection == docs["x26"].hilbertIntersection &&
                           grlex.gram.criticalNus.size() == docs["x26"].gram.criticalNus.size();
            for (size_t i = 0; i < grlex.gram.criticalNus.size() && okOrder; ++i)
                okOrder = grlex.gram.criticalNus[i].nu == docs["x26"].gram.criticalNus[i].nu &&
                          grlex.gram.criticalNus[i].corank == docs["x26"].gram.criticalNus[i].corank;
            criterion(7, "determinism (byte-identical reports) and order independence",
                      okBytes && okOrder);
        }
    } catch (const std::exception& e) {
        std::cout << "acceptance run aborted: " << e.what() << "\n";
        return 1;
    }

    std::cout << (failures == 0 ? "ALL ACCEPTANCE CRITERIA PASS"
                                : "ACCEPTANCE FAILURES: " + std::to_string(failures))
              << "\n";
    return failures == 0 ? 0 : 1;
}

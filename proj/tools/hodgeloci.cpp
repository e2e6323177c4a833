#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hodgeloci/scenario.hpp"

using namespace hodge;

namespace {

std::string readFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::vector<Rational> parseNuList(const std::string& list) {
    std::vector<Rational> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(parse_rational(item));
    }
    return out;
}

// generators are newline- or semicolon-separated polynomial expressions
std::vector<Polynomial> parseGenerators(const std::string& text, int numVars) {
    std::vector<Polynomial> gens;
    std::string cur;
    auto flush = [&] {
        bool blank = cur.find_first_not_of(" \t\r") == std::string::npos;
        if (!blank && cur[cur.find_first_not_of(" \t\r")] != '#')
            gens.push_back(parse_polynomial(cur, numVars));
        cur.clear();
    };
    for (char c : text) {
        if (c == '\n' || c == ';') flush();
        else cur += c;
    }
    flush();
    return gens;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Hodge-locus computations for hypersurface scenarios"};
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "Run a scenario and emit a report");
    std::string familyName = "x-kd";
    int k = 2, d = 6;
    std::string nuList, formatName = "json", outPath, orderName = "grevlex";
    long seed = 0;
    bool oracle = false;
    std::string customF;
    std::vector<std::string> plane1, plane2;
    run->add_option("--family", familyName,
                    "dan-k1 | x-kd | lowdeg-d4k3 | lowdeg-d5k3 | lowdeg-d3k5 | custom");
    run->add_option("--k", k, "number of plane forms minus one");
    run->add_option("--d", d, "hypersurface degree");
    run->add_option("--nu", nuList, "comma-separated rational nu samples");
    run->add_option("--seed", seed, "seed for randomized generator choices");
    run->add_flag("--oracle", oracle, "enable redundant cross-check computations");
    run->add_option("--format", formatName, "json | csv | markdown");
    run->add_option("--out", outPath, "output path (default stdout)");
    run->add_option("--order", orderName, "grevlex | grlex");
    run->add_option("--f", customF, "custom: polynomial text or @file");
    run->add_option("--plane1", plane1, "custom: linear forms of the first plane");
    run->add_option("--plane2", plane2, "custom: linear forms of the second plane");

    // hilbert
    auto* hil = app.add_subcommand("hilbert", "Hilbert function of S/I for a generated ideal");
    std::string idealPath;
    int maxDegree = 10, hilVars = -1;
    hil->add_option("--ideal", idealPath, "file of generators, one per line")->required();
    hil->add_option("--max-degree", maxDegree, "largest degree to tabulate");
    hil->add_option("--vars", hilVars, "number of variables (default: inferred)");

    // gram
    auto* gram = app.add_subcommand("gram", "Gram/kernel analysis for a custom scenario");
    std::string gramF;
    std::vector<std::string> gPlane1, gPlane2;
    std::string gNuList, gFormat = "json", gOut;
    gram->add_option("--f", gramF, "polynomial text or @file")->required();
    gram->add_option("--plane1", gPlane1, "linear forms of the first plane")->required();
    gram->add_option("--plane2", gPlane2, "linear forms of the second plane")->required();
    gram->add_option("--nu", gNuList, "comma-separated rational nu samples");
    gram->add_option("--format", gFormat, "json | csv | markdown");
    gram->add_option("--out", gOut, "output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (hil->parsed()) {
            std::vector<Polynomial> gens = parseGenerators(readFile(idealPath), hilVars);
            if (gens.empty()) throw PreconditionError("ideal file has no generators");
            int n = 0;
            for (const auto& g : gens) n = std::max(n, g.numVars());
            std::vector<Polynomial> padded;
            for (const auto& g : gens) {
                Polynomial p(n);
                for (const auto& [m, c] : g.terms()) {
                    Monomial mm(n);
                    for (int i = 0; i < g.numVars(); ++i) mm.exps[i] = m.exps[i];
                    p.addTerm(mm, c);
                }
                padded.push_back(std::move(p));
            }
            auto ring = std::make_shared<BasisCache>(n);
            IdealModel ideal(ring, padded);
            std::cout << "t,h(S/I)\n";
            for (int t = 0; t <= maxDegree; ++t) std::cout << t << "," << ideal.hilbert(t) << "\n";
            return 0;
        }

        ScenarioConfig cfg;
        if (run->parsed()) {
            cfg.family = family_from_string(familyName);
            cfg.k = k;
            cfg.d = d;
            cfg.seed = seed;
            cfg.oracleChecks = oracle;
            if (!nuList.empty()) cfg.nuSamples = parseNuList(nuList);
            if (orderName == "grevlex") cfg.orderKind = OrderKind::GrevLex;
            else if (orderName == "grlex") cfg.orderKind = OrderKind::GrLex;
            else throw PreconditionError("unknown order: " + orderName);
            if (cfg.family == Family::Custom) {
                cfg.customF = customF.rfind('@', 0) == 0 ? readFile(customF.substr(1)) : customF;
                cfg.customPlane1 = plane1;
                cfg.customPlane2 = plane2;
            }
        } else { // gram subcommand: custom scenario, report restricted by format
            cfg.family = Family::Custom;
            cfg.customF = gramF.rfind('@', 0) == 0 ? readFile(gramF.substr(1)) : gramF;
            cfg.customPlane1 = gPlane1;
            cfg.customPlane2 = gPlane2;
            if (!gNuList.empty()) cfg.nuSamples = parseNuList(gNuList);
            formatName = gFormat;
            outPath = gOut;
        }
        ReportDocument doc = run_scenario(cfg);
        emit_report(doc, report_format_from_string(formatName), outPath);
        if (!doc.allAssertionsPass()) {
            std::cerr << "error: scenario assertions failed\n";
            return 2;
        }
        return 0;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return 3;
    } catch (const StageError& e) {
        std::cerr << "stage failed: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

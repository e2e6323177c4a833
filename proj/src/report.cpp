#include "hodgeloci/scenario.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace hodge {

namespace {

using ojson = nlohmann::ordered_json;

ojson toJson(const ReportDocument& doc) {
    ojson j;
    j["schema_version"] = doc.schemaVersion;
    j["engine_version"] = doc.engineVersion;
    ojson cfg;
    cfg["family"] = doc.familyName;
    cfg["k"] = doc.k;
    cfg["d"] = doc.d;
    cfg["socle_degree"] = doc.socleDegree;
    cfg["seed"] = doc.seed;
    cfg["order"] = doc.orderName;
    cfg["nu_samples"] = doc.nuSampleStrings;
    j["config"] = cfg;
    ojson hyp;
    hyp["f"] = doc.fText;
    hyp["plane1"] = doc.plane1Forms;
    hyp["plane2"] = doc.plane2Forms;
    hyp["smooth_certificate_degree"] = doc.smoothCertificateDegree;
    j["hypersurface"] = hyp;
    j["notes"] = doc.notes;
    ojson ideals = ojson::array();
    for (const auto& I : doc.ideals) {
        ojson o;
        o["name"] = I.name;
        o["generators"] = I.generators;
        o["hilbert"] = I.hilbert;
        o["quotient_dimension"] = I.quotientDimension;
        o["socle_monomial"] = I.socleMonomial;
        o["gorenstein_ok"] = I.gorensteinOk;
        if (!I.gorensteinFailure.empty()) o["gorenstein_failure"] = I.gorensteinFailure;
        ideals.push_back(std::move(o));
    }
    j["ideals"] = std::move(ideals);
    j["hilbert_sum"] = doc.hilbertSum;
    j["hilbert_intersection"] = doc.hilbertIntersection;
    ojson gram;
    gram["row_degree"] = doc.gram.rowDegree;
    gram["col_degree"] = doc.gram.colDegree;
    {
        std::vector<std::string> rows, cols;
        for (const auto& m : doc.gram.rows) rows.push_back(Polynomial::monomial(m).str());
        for (const auto& m : doc.gram.cols) cols.push_back(Polynomial::monomial(m).str());
        gram["rows"] = rows;
        gram["cols"] = cols;
    }
    gram["generic_rank"] = doc.gram.genericRank;
    gram["has_zero_row"] = doc.gram.hasZeroRow;
    {
        std::map<std::string, int> census;
        for (const auto& b : doc.gram.blocks) census[b.shape]++;
        ojson c;
        for (const auto& [shape, n] : census) c[shape] = n;
        gram["block_census"] = std::move(c);
        ojson blocks = ojson::array();
        for (const auto& b : doc.gram.blocks) {
            ojson o;
            o["rows"] = b.rowIdx;
            o["cols"] = b.colIdx;
            o["shape"] = b.shape;
            o["generic_rank"] = b.genericRank;
            if (!b.determinant.empty()) o["determinant"] = b.determinant;
            blocks.push_back(std::move(o));
        }
        gram["blocks"] = std::move(blocks);
    }
    {
        ojson crit = ojson::array();
        for (const auto& c : doc.gram.criticalNus) {
            ojson o;
            o["nu"] = to_string(c.nu);
            o["corank"] = c.corank;
            crit.push_back(std::move(o));
        }
        gram["critical_nus"] = std::move(crit);
        gram["irrational_critical_factors"] = doc.gram.irrationalCriticalFactors;
    }
    j["gram"] = std::move(gram);
    ojson excess;
    excess["joint_tangent_codim"] = doc.excess.tangentCodimJoint;
    excess["generic_excess"] = doc.excess.genericExcess;
    {
        ojson per = ojson::array();
        for (const auto& v : doc.excess.perNu) {
            ojson o;
            o["nu"] = to_string(v.nu);
            o["rank"] = v.rank;
            o["excess"] = v.excess;
            o["combined_codim"] = v.combinedCodim;
            o["verdict"] = v.isExcess ? "excess" : "expected";
            per.push_back(std::move(o));
        }
        excess["per_nu"] = std::move(per);
    }
    j["excess"] = std::move(excess);
    ojson tsp;
    tsp["feasible"] = doc.thmTsp.feasible;
    tsp["no_left_kernel"] = doc.thmTsp.noLeftKernel;
    tsp["rows"] = doc.thmTsp.rows;
    tsp["cols"] = doc.thmTsp.cols;
    if (!doc.thmTsp.witness.empty()) {
        std::vector<std::string> w;
        for (const auto& c : doc.thmTsp.witness) w.push_back(to_string(c));
        tsp["witness"] = w;
    }
    j["thm_tsp"] = std::move(tsp);
    {
        ojson oracle;
        for (const auto& [name, ok] : doc.oracleFlags) oracle[name] = ok;
        j["oracle"] = std::move(oracle);
    }
    {
        ojson as = ojson::array();
        for (const auto& a : doc.assertions) {
            ojson o;
            o["name"] = a.name;
            o["pass"] = a.pass;
            if (!a.detail.empty()) o["detail"] = a.detail;
            as.push_back(std::move(o));
        }
        j["assertions"] = std::move(as);
        j["all_assertions_pass"] = doc.allAssertionsPass();
    }
    return j;
}

std::string renderCsv(const ReportDocument& doc) {
    std::ostringstream os;
    auto esc = [](const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string out = "\"";
        for (char c : s) {
            if (c == '"') out += '"';
            out += c;
        }
        return out + "\"";
    };
    os << "section,key,value\n";
    os << "meta,schema_version," << doc.schemaVersion << "\n";
    os << "meta,engine_version," << esc(doc.engineVersion) << "\n";
    os << "config,family," << doc.familyName << "\n";
    os << "config,k," << doc.k << "\n";
    os << "config,d," << doc.d << "\n";
    os << "config,socle_degree," << doc.socleDegree << "\n";
    os << "config,seed," << doc.seed << "\n";
    os << "config,order," << doc.orderName << "\n";
    os << "hypersurface,f," << esc(doc.fText) << "\n";
    os << "hypersurface,smooth_certificate_degree," << doc.smoothCertificateDegree << "\n";
    for (const auto& I : doc.ideals) {
        for (size_t t = 0; t < I.hilbert.size(); ++t)
            os << "hilbert_" << I.name << "," << t << "," << I.hilbert[t] << "\n";
        os << "ideal_" << I.name << ",quotient_dimension," << I.quotientDimension << "\n";
        os << "ideal_" << I.name << ",socle_monomial," << esc(I.socleMonomial) << "\n";
        os << "ideal_" << I.name << ",gorenstein," << (I.gorensteinOk ? "ok" : "fail") << "\n";
    }
    for (size_t t = 0; t < doc.hilbertSum.size(); ++t)
        os << "hilbert_sum," << t << "," << doc.hilbertSum[t] << "\n";
    for (size_t t = 0; t < doc.hilbertIntersection.size(); ++t)
        os << "hilbert_intersection," << t << "," << doc.hilbertIntersection[t] << "\n";
    os << "gram,rows," << doc.gram.rows.size() << "\n";
    os << "gram,cols," << doc.gram.cols.size() << "\n";
    os << "gram,generic_rank," << doc.gram.genericRank << "\n";
    os << "gram,has_zero_row," << (doc.gram.hasZeroRow ? "true" : "false") << "\n";
    {
        std::map<std::string, int> census;
        for (const auto& b : doc.gram.blocks) census[b.shape]++;
        for (const auto& [shape, n] : census) os << "block_census," << esc(shape) << "," << n << "\n";
    }
    for (const auto& c : doc.gram.criticalNus)
        os << "critical_nu," << to_string(c.nu) << "," << c.corank << "\n";
    os << "excess,joint_tangent_codim," << doc.excess.tangentCodimJoint << "\n";
    os << "excess,generic_excess," << doc.excess.genericExcess << "\n";
    for (const auto& v : doc.excess.perNu)
        os << "excess_at_nu," << to_string(v.nu) << ","
           << (v.isExcess ? "excess" : "expected") << "\n";
    os << "thm_tsp,feasible," << (doc.thmTsp.feasible ? "true" : "false") << "\n";
    os << "thm_tsp,no_left_kernel," << (doc.thmTsp.noLeftKernel ? "true" : "false") << "\n";
    for (const auto& [name, ok] : doc.oracleFlags)
        os << "oracle," << name << "," << (ok ? "true" : "false") << "\n";
    for (const auto& a : doc.assertions)
        os << "assertion," << a.name << "," << (a.pass ? "pass" : "fail") << "\n";
    os << "summary,all_assertions_pass," << (doc.allAssertionsPass() ? "true" : "false") << "\n";
    return os.str();
}

std::string renderMarkdown(const ReportDocument& doc) {
    std::ostringstream os;
    os << "# Hodge locus report: " << doc.familyName << " (k=" << doc.k << ", d=" << doc.d
       << ")\n\n";
    os << "- engine: " << doc.engineVersion << " (schema " << doc.schemaVersion << ")\n";
    os << "- order: " << doc.orderName << ", seed: " << doc.seed << "\n";
    os << "- socle degree s = " << doc.socleDegree << "\n";
    os << "- f = `" << doc.fText << "`\n";
    os << "- Pi_1 = V(";
    for (size_t i = 0; i < doc.plane1Forms.size(); ++i)
        os << (i ? ", " : "") << doc.plane1Forms[i];
    os << "), Pi_2 = V(";
    for (size_t i = 0; i < doc.plane2Forms.size(); ++i)
        os << (i ? ", " : "") << doc.plane2Forms[i];
    os << ")\n";
    os << "- smoothness certified at degree " << doc.smoothCertificateDegree << "\n\n";
    if (!doc.notes.empty()) {
        os << "## Notes\n\n";
        for (const auto& n : doc.notes) os << "- " << n << "\n";
        os << "\n";
    }
    os << "## Hilbert functions\n\n";
    os << "| t | h(S/I1) | h(S/I2) | h(S/(I1+I2)) | h(S/(I1 cap I2)) |\n";
    os << "|---|---------|---------|--------------|------------------|\n";
    for (size_t t = 0; t < doc.hilbertSum.size(); ++t)
        os << "| " << t << " | " << doc.ideals[0].hilbert[t] << " | " << doc.ideals[1].hilbert[t]
           << " | " << doc.hilbertSum[t] << " | " << doc.hilbertIntersection[t] << " |\n";
    os << "\n";
    for (const auto& I : doc.ideals) {
        os << "- " << I.name << ": quotient dimension " << I.quotientDimension << ", socle `"
           << I.socleMonomial << "`, Gorenstein " << (I.gorensteinOk ? "ok" : ("FAIL (" + I.gorensteinFailure + ")"))
           << "\n";
    }
    os << "\n## Gram matrix (degrees " << doc.gram.rowDegree << " x " << doc.gram.colDegree
       << ")\n\n";
    os << "- size " << doc.gram.rows.size() << " x " << doc.gram.cols.size() << ", generic rank "
       << doc.gram.genericRank << ", zero rows: " << (doc.gram.hasZeroRow ? "yes" : "no") << "\n";
    {
        std::map<std::string, int> census;
        for (const auto& b : doc.gram.blocks) census[b.shape]++;
        os << "- block census:";
        for (const auto& [shape, n] : census) os << " `" << shape << "`x" << n;
        os << "\n";
    }
    os << "- critical nu values:";
    if (doc.gram.criticalNus.empty()) os << " none";
    for (const auto& c : doc.gram.criticalNus)
        os << " " << to_string(c.nu) << " (corank " << c.corank << ")";
    os << "\n";
    if (!doc.gram.irrationalCriticalFactors.empty()) {
        os << "- unresolved pivot factors:";
        for (const auto& f : doc.gram.irrationalCriticalFactors) os << " `" << f << "`";
        os << "\n";
    }
    os << "\n## Excess analysis\n\n";
    os << "- joint tangent codimension " << doc.excess.tangentCodimJoint << ", generic excess "
       << doc.excess.genericExcess << "\n\n";
    os << "| nu | rank | excess | combined codim | verdict |\n";
    os << "|----|------|--------|----------------|---------|\n";
    for (const auto& v : doc.excess.perNu)
        os << "| " << to_string(v.nu) << " | " << v.rank << " | " << v.excess << " | "
           << v.combinedCodim << " | " << (v.isExcess ? "excess" : "expected") << " |\n";
    os << "\n## Multiplication-pairing criterion\n\n";
    if (!doc.thmTsp.feasible) {
        os << "- infeasible for these (k, d): requires d <= kd - 2k - 2\n";
    } else {
        os << "- pairing " << doc.thmTsp.rows << " x " << doc.thmTsp.cols << ", left kernel "
           << (doc.thmTsp.noLeftKernel ? "trivial (criterion holds)" : "NONTRIVIAL") << "\n";
    }
    if (!doc.oracleFlags.empty()) {
        os << "\n## Oracle cross-checks\n\n";
        for (const auto& [name, ok] : doc.oracleFlags)
            os << "- " << name << ": " << (ok ? "agree" : "DISAGREE") << "\n";
    }
    os << "\n## Assertions\n\n";
    for (const auto& a : doc.assertions) {
        os << "- " << (a.pass ? "PASS" : "FAIL") << " " << a.name;
        if (!a.detail.empty()) os << " (" << a.detail << ")";
        os << "\n";
    }
    os << "\n**" << (doc.allAssertionsPass() ? "All assertions pass." : "Some assertions FAILED.")
       << "**\n";
    return os.str();
}

} // namespace

ReportFormat report_format_from_string(const std::string& s) {
    if (s == "json") return ReportFormat::Json;
    if (s == "csv") return ReportFormat::Csv;
    if (s == "markdown" || s == "md") return ReportFormat::Markdown;
    throw PreconditionError("unknown report format: " + s);
}

std::string render_report(const ReportDocument& doc, ReportFormat format) {
    switch (format) {
        case ReportFormat::Json: return toJson(doc).dump(2) + "\n";
        case ReportFormat::Csv: return renderCsv(doc);
        case ReportFormat::Markdown: return renderMarkdown(doc);
    }
    return {};
}

void emit_report(const ReportDocument& doc, ReportFormat format, const std::string& path) {
    std::string text = render_report(doc, format);
    if (path.empty() || path == "-") {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
}

} // namespace hodge

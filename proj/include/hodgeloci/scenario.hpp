#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hodgeloci/pairing.hpp"

namespace hodge {

inline constexpr const char* kEngineVersion = "hodgeloci 0.1.0";
inline constexpr const char* kReportSchemaVersion = "1";

// raised when a scenario precondition (smoothness, family hypotheses) fails
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// raised when a pipeline stage produces inconsistent results
struct StageError : std::runtime_error {
    StageError(const std::string& stage, const std::string& what)
        : std::runtime_error("[" + stage + "] " + what), stage(stage) {}
    std::string stage;
};

enum class Family { DanK1, XKD, LowDegD4K3, LowDegD5K3, LowDegD3K5, Custom };

Family family_from_string(const std::string& name);
std::string family_to_string(Family f);

struct ScenarioConfig {
    Family family = Family::XKD;
    int k = 2;
    int d = 6;
    std::vector<Rational> nuSamples; // empty = default {-2,-1,0,1/3,1,2,5}
    long seed = 0;
    bool oracleChecks = false;
    OrderKind orderKind = OrderKind::GrevLex;
    // custom family inputs
    std::string customF;
    std::vector<std::string> customPlane1, customPlane2;

    std::vector<Rational> effectiveNuSamples() const;
};

struct ScenarioBuild {
    Polynomial f;
    LinearSpacePlane plane1, plane2;
    std::shared_ptr<BasisCache> ring;
    int k = 0, d = 0;
    SmoothnessReport smoothness;
    std::vector<std::string> notes; // e.g. the corrected Pi_2 provenance note
};

// the exact scenario polynomial and planes; smoothness is verified here
ScenarioBuild build_scenario(const ScenarioConfig& cfg);

struct IdealSummary {
    std::string name;
    std::vector<std::string> generators;
    std::vector<long> hilbert; // t = 0..s
    long quotientDimension = 0;
    std::string socleMonomial;
    bool gorensteinOk = false;
    std::string gorensteinFailure;
};

struct AssertionResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ReportDocument {
    std::string schemaVersion = kReportSchemaVersion;
    std::string engineVersion = kEngineVersion;
    std::string familyName;
    int k = 0, d = 0, socleDegree = 0;
    long seed = 0;
    std::string orderName;
    std::vector<std::string> nuSampleStrings;
    std::string fText;
    std::vector<std::string> plane1Forms, plane2Forms;
    std::vector<std::string> notes;
    int smoothCertificateDegree = -1;
    std::vector<IdealSummary> ideals; // I1, I2
    std::vector<long> hilbertSum;     // I1 + I2
    std::vector<long> hilbertIntersection;
    GramReport gram;
    ExcessReport excess;
    ThmTspResult thmTsp;
    std::map<std::string, bool> oracleFlags;
    std::vector<AssertionResult> assertions;

    bool allAssertionsPass() const;
};

ReportDocument run_scenario(const ScenarioConfig& cfg);

enum class ReportFormat { Json, Csv, Markdown };
ReportFormat report_format_from_string(const std::string& s);

std::string render_report(const ReportDocument& doc, ReportFormat format);
void emit_report(const ReportDocument& doc, ReportFormat format, const std::string& path);

// monomial box basis of the X_{k,d} quotients (independent counting oracle):
// exponents bounded by d-2 on the listed variables
std::vector<Monomial> box_basis_slice(int numVars, const std::vector<int>& vars, int maxExp,
                                      int degree);

} // namespace hodge

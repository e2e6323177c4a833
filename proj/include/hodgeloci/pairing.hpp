#pragma once

#include <string>
#include <vector>

#include "hodgeloci/associated.hpp"
#include "hodgeloci/nupoly.hpp"

namespace hodge {

// psi_j(p, q): coefficient of the socle generator M_j in p*q mod I_j.
// Requires deg p + deg q = socle degree.
Rational pairing_value(const AssociatedIdeal& assoc, const Polynomial& p, const Polynomial& q);

struct GramBlock {
    std::vector<int> rowIdx, colIdx; // positions into rows/cols, ascending
    int genericRank = 0;
    std::vector<NuPoly> pivots;         // fraction-free pivot polynomials
    std::string determinant;            // printed det for square blocks, else ""
    std::string shape;                  // permutation-invariant signature
};

struct CriticalNu {
    Rational nu;
    int corank = 0;
};

// Parametric Gram matrix of psi_1 + nu * psi_2 on the quotient by I_1 /\ I_2.
struct GramReport {
    int rowDegree = 0, colDegree = 0;
    std::vector<Monomial> rows; // C_1
    std::vector<Monomial> cols; // C_2
    std::vector<std::vector<Scalar>> entries; // each of nu-degree <= 1
    std::vector<GramBlock> blocks;
    int genericRank = 0;
    std::vector<CriticalNu> criticalNus;
    std::vector<std::string> irrationalCriticalFactors;
    bool hasZeroRow = false;
};

GramReport gram_matrix(const AssociatedIdeal& i1, const AssociatedIdeal& i2, int rowDegree,
                       int colDegree);

int generic_rank(const GramReport& g);
long rank_at(const GramReport& g, const Rational& nu0);
std::vector<CriticalNu> critical_nu_values(const GramReport& g);
// exact basis of {w : w^T G(nu0) = 0}
std::vector<std::vector<Rational>> left_kernel_at(const GramReport& g, const Rational& nu0);

// Sufficient no-excess criterion: left kernel of the multiplication pairing
// ((I1+I2)/I2)_d x ((I1+I2)/I2)_{kd-2k-2} -> (S/I2)_{(k+1)(d-2)}.
struct ThmTspResult {
    bool feasible = false; // requires d <= kd - 2k - 2
    bool noLeftKernel = false;
    int rows = 0, cols = 0;
    std::vector<Rational> witness; // kernel vector when the criterion fails
};
ThmTspResult thmTsp_criterion(const AssociatedIdeal& i1, const AssociatedIdeal& i2, int d, int k);

struct ExcessVerdict {
    Rational nu;
    long rank = 0;
    long excess = 0;        // left-kernel dimension at this nu
    long combinedCodim = 0; // joint codim minus excess
    bool isExcess = false;
};

struct ExcessReport {
    long tangentCodimJoint = 0;
    std::vector<ExcessVerdict> perNu;
    long genericExcess = 0; // row count minus generic rank
};

ExcessReport excess_report(const GramReport& g, long jointCodim,
                           const std::vector<Rational>& nuSamples);

} // namespace hodge

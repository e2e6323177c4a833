#pragma once

#include <map>
#include <optional>
#include <vector>

#include "hodgeloci/monomial.hpp"
#include "hodgeloci/nupoly.hpp"
#include "hodgeloci/polynomial.hpp"
#include "hodgeloci/rational.hpp"

namespace hodge {

// Monomial basis of S_t, sorted descending by the order. Column 0 is the
// largest monomial, so echelon pivots coincide with lead terms.
class DegreeBasis {
public:
    DegreeBasis() = default;
    DegreeBasis(int numVars, int degree, const MonomialOrder& order);

    int size() const { return static_cast<int>(monomials_.size()); }
    const Monomial& operator[](int i) const { return monomials_[i]; }
    const std::vector<Monomial>& monomials() const { return monomials_; }
    int index(const Monomial& m) const; // -1 if absent

    std::vector<std::pair<int, Rational>> toRow(const Polynomial& p) const;
    Polynomial toPolynomial(const std::vector<std::pair<int, Rational>>& row, int numVars) const;

private:
    std::vector<Monomial> monomials_;
    std::map<Monomial, int> index_;
};

// sparse row: (column, coefficient), sorted ascending by column, coeffs nonzero
using SparseRow = std::vector<std::pair<int, Rational>>;

SparseRow rowAdd(const SparseRow& a, const SparseRow& b, const Rational& factor); // a + factor*b

// Row echelon form accumulated by insertion. A pivot column may carry an
// implicit unit row (the span contains the plain basis vector), which keeps
// monomial-ideal spans cheap.
class Echelon {
public:
    explicit Echelon(int ncols = 0) : ncols_(ncols) {}

    int ncols() const { return ncols_; }
    int rank() const { return static_cast<int>(rows_.size()); }

    // returns pivot column, or -1 if the row reduced to zero
    int insert(SparseRow row);
    void insertUnit(int col); // fast path: basis vector e_col is in the span

    bool isPivot(int col) const { return rows_.count(col) != 0; }
    // materialized pivot row (leading entry (col, 1)); col must be a pivot
    SparseRow pivotRow(int col) const {
        const SparseRow& r = rows_.at(col);
        if (r.empty()) return SparseRow{{col, Rational(1)}};
        return r;
    }
    std::vector<int> pivotColumns() const;
    std::vector<int> standardColumns() const; // non-pivot columns, ascending

    // fully reduce: returns residual supported on standard columns
    SparseRow reduce(SparseRow row) const;
    bool contains(const SparseRow& row) const { return reduce(row).empty(); }

    // iterate over stored rows (unit pivots yield single-entry rows)
    template <typename F>
    void forEachRow(F&& f) const {
        for (const auto& [col, row] : rows_) {
            if (row.empty()) f(SparseRow{{col, Rational(1)}});
            else f(row);
        }
    }

    // coefficient of NF(e_col) on a designated standard column, for every
    // column; requires socleCol to be a standard column
    std::vector<Rational> socleTable(int socleCol) const;

private:
    int ncols_;
    // pivot col -> row with leading entry (col, 1); empty row = implicit unit
    std::map<int, SparseRow> rows_;
};

// vector-space intersection of two row spans (same column count)
Echelon echelon_intersect(const Echelon& a, const Echelon& b);

// ---- dense exact linear algebra over Q (small matrices) ----

struct DenseMatrix {
    int nrows = 0, ncols = 0;
    std::vector<std::vector<Rational>> a;

    DenseMatrix() = default;
    DenseMatrix(int r, int c) : nrows(r), ncols(c), a(r, std::vector<Rational>(c, Rational(0))) {}
    std::vector<Rational>& operator[](int i) { return a[i]; }
    const std::vector<Rational>& operator[](int i) const { return a[i]; }
};

int dense_rank(DenseMatrix m);
// basis of {x : m x = 0}
std::vector<std::vector<Rational>> dense_nullspace(DenseMatrix m);
// basis of {w : w^T m = 0}
std::vector<std::vector<Rational>> dense_left_nullspace(const DenseMatrix& m);

// ---- fraction-free parametric elimination over Q[nu] ----

struct BareissResult {
    int rank = 0;
    std::vector<NuPoly> pivots; // pivot polynomials met along the elimination
};

// Bareiss fraction-free elimination of a matrix over Q[nu]; rank is the rank
// over the function field Q(nu). A specialization nu -> nu0 can only drop
// rank at a root of one of the returned pivots.
BareissResult bareiss_rank(std::vector<std::vector<NuPoly>> m);

} // namespace hodge

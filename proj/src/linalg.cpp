#include "hodgeloci/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace hodge {

DegreeBasis::DegreeBasis(int numVars, int degree, const MonomialOrder& order) {
    monomials_ = enumerate_monomials(numVars, degree, order);
    for (int i = 0; i < static_cast<int>(monomials_.size()); ++i) index_.emplace(monomials_[i], i);
}

int DegreeBasis::index(const Monomial& m) const {
    auto it = index_.find(m);
    return it == index_.end() ? -1 : it->second;
}

std::vector<std::pair<int, Rational>> DegreeBasis::toRow(const Polynomial& p) const {
    SparseRow row;
    for (const auto& [m, c] : p.terms()) {
        int i = index(m);
        if (i < 0) throw std::invalid_argument("polynomial term outside the degree basis");
        row.emplace_back(i, c);
    }
    std::sort(row.begin(), row.end());
    return row;
}

Polynomial DegreeBasis::toPolynomial(const SparseRow& row, int numVars) const {
    Polynomial p(numVars);
    for (const auto& [i, c] : row) p.addTerm(monomials_[i], c);
    return p;
}

SparseRow rowAdd(const SparseRow& a, const SparseRow& b, const Rational& factor) {
    SparseRow out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            Rational c = b[j].second * factor;
            if (c != 0) out.emplace_back(b[j].first, c);
            ++j;
        } else {
            Rational c = a[i].second + b[j].second * factor;
            if (c != 0) out.emplace_back(a[i].first, c);
            ++i; ++j;
        }
    }
    return out;
}

int Echelon::insert(SparseRow row) {
    while (!row.empty()) {
        int lead = row.front().first;
        auto it = rows_.find(lead);
        if (it == rows_.end()) {
            // normalize to leading coefficient 1
            Rational lc = row.front().second;
            if (lc != 1)
                for (auto& [c, v] : row) v /= lc;
            rows_.emplace(lead, std::move(row));
            return lead;
        }
        if (it->second.empty()) {
            row.erase(row.begin()); // unit pivot: drop the entry
        } else {
            row = rowAdd(row, it->second, -row.front().second);
        }
    }
    return -1;
}

void Echelon::insertUnit(int col) {
    auto it = rows_.find(col);
    if (it == rows_.end()) {
        rows_.emplace(col, SparseRow{});
    } else if (!it->second.empty()) {
        // e_col together with the stored row spans e_col plus the tail;
        // re-insert the tail and keep the unit here
        SparseRow tail(it->second.begin() + 1, it->second.end());
        it->second.clear();
        insert(std::move(tail));
    }
}

std::vector<int> Echelon::pivotColumns() const {
    std::vector<int> cols;
    cols.reserve(rows_.size());
    for (const auto& [c, r] : rows_) cols.push_back(c);
    return cols;
}

std::vector<int> Echelon::standardColumns() const {
    std::vector<int> cols;
    for (int c = 0; c < ncols_; ++c)
        if (!rows_.count(c)) cols.push_back(c);
    return cols;
}

SparseRow Echelon::reduce(SparseRow row) const {
    SparseRow residual;
    while (!row.empty()) {
        int lead = row.front().first;
        auto it = rows_.find(lead);
        if (it == rows_.end()) {
            residual.push_back(row.front());
            row.erase(row.begin());
        } else if (it->second.empty()) {
            row.erase(row.begin());
        } else {
            row = rowAdd(row, it->second, -row.front().second);
        }
    }
    return residual;
}

std::vector<Rational> Echelon::socleTable(int socleCol) const {
    if (rows_.count(socleCol))
        throw std::logic_error("socleTable: socle column is a pivot");
    // memoized top-down over columns, descending order guarantees the
    // recursion only moves to larger column indices
    std::vector<Rational> table(ncols_, Rational(0));
    std::vector<char> done(ncols_, 0);
    table[socleCol] = 1;
    done[socleCol] = 1;
    // process pivot columns from the last (smallest monomial) upwards: row
    // entries beyond the pivot always have larger column indices
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
        int col = it->first;
        const SparseRow& row = it->second;
        Rational v(0);
        if (!row.empty()) {
            // row = e_col + tail, row in span => NF(e_col) = -NF(tail)
            for (size_t k = 1; k < row.size(); ++k) {
                int c = row[k].first;
                if (!done[c]) {
                    // non-pivot standard column other than socle: contributes 0
                    if (!rows_.count(c)) { done[c] = 1; }
                }
                v -= row[k].second * table[c];
            }
        }
        table[col] = v;
        done[col] = 1;
    }
    return table;
}

Echelon echelon_intersect(const Echelon& a, const Echelon& b) {
    // v in span(a) /\ span(b) <=> v in span(a) and v reduces to zero against
    // b. Rows of a that already vanish go straight in; the rest contribute
    // through the nullspace of their images in the quotient by span(b).
    Echelon inter(a.ncols());
    std::vector<SparseRow> pending, images;
    a.forEachRow([&](const SparseRow& row) {
        SparseRow res = b.reduce(row);
        if (res.empty()) {
            inter.insert(row);
        } else {
            pending.push_back(row);
            images.push_back(std::move(res));
        }
    });
    if (!pending.empty()) {
        std::map<int, int> colIdx;
        for (const auto& img : images)
            for (const auto& [c, v] : img) colIdx.emplace(c, 0);
        int nc = 0;
        for (auto& [c, idx] : colIdx) idx = nc++;
        DenseMatrix m(nc, static_cast<int>(pending.size()));
        for (size_t j = 0; j < images.size(); ++j)
            for (const auto& [c, v] : images[j]) m[colIdx[c]][static_cast<int>(j)] = v;
        for (const auto& comb : dense_nullspace(std::move(m))) {
            SparseRow v;
            for (size_t j = 0; j < pending.size(); ++j)
                if (comb[j] != 0) v = rowAdd(v, pending[j], comb[j]);
            if (!v.empty()) inter.insert(std::move(v));
        }
    }
    return inter;
}

int dense_rank(DenseMatrix m) {
    int rank = 0;
    for (int col = 0; col < m.ncols && rank < m.nrows; ++col) {
        int piv = -1;
        for (int r = rank; r < m.nrows; ++r)
            if (m[r][col] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(m.a[rank], m.a[piv]);
        for (int r = rank + 1; r < m.nrows; ++r) {
            if (m[r][col] == 0) continue;
            Rational f = m[r][col] / m[rank][col];
            for (int c = col; c < m.ncols; ++c) m[r][c] -= f * m[rank][c];
        }
        ++rank;
    }
    return rank;
}

std::vector<std::vector<Rational>> dense_nullspace(DenseMatrix m) {
    std::vector<int> pivotCol;
    int rank = 0;
    for (int col = 0; col < m.ncols && rank < m.nrows; ++col) {
        int piv = -1;
        for (int r = rank; r < m.nrows; ++r)
            if (m[r][col] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(m.a[rank], m.a[piv]);
        Rational lc = m[rank][col];
        for (int c = col; c < m.ncols; ++c) m[rank][c] /= lc;
        for (int r = 0; r < m.nrows; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (int c = col; c < m.ncols; ++c) m[r][c] -= f * m[rank][c];
        }
        pivotCol.push_back(col);
        ++rank;
    }
    std::vector<char> isPivot(m.ncols, 0);
    for (int c : pivotCol) isPivot[c] = 1;
    std::vector<std::vector<Rational>> basis;
    for (int freeCol = 0; freeCol < m.ncols; ++freeCol) {
        if (isPivot[freeCol]) continue;
        std::vector<Rational> v(m.ncols, Rational(0));
        v[freeCol] = 1;
        for (int r = 0; r < rank; ++r) v[pivotCol[r]] = -m[r][freeCol];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<Rational>> dense_left_nullspace(const DenseMatrix& m) {
    DenseMatrix t(m.ncols, m.nrows);
    for (int r = 0; r < m.nrows; ++r)
        for (int c = 0; c < m.ncols; ++c) t[c][r] = m[r][c];
    return dense_nullspace(std::move(t));
}

BareissResult bareiss_rank(std::vector<std::vector<NuPoly>> m) {
    BareissResult res;
    if (m.empty()) return res;
    int nrows = static_cast<int>(m.size());
    int ncols = static_cast<int>(m[0].size());
    NuPoly prev(Rational(1));
    int row = 0;
    for (int col = 0; col < ncols && row < nrows; ++col) {
        int piv = -1;
        for (int r = row; r < nrows; ++r)
            if (!m[r][col].isZero()) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(m[row], m[piv]);
        const NuPoly p = m[row][col];
        for (int r = row + 1; r < nrows; ++r) {
            for (int c = col + 1; c < ncols; ++c)
                m[r][c] = (p * m[r][c] - m[r][col] * m[row][c]).divExact(prev);
            m[r][col] = NuPoly();
        }
        res.pivots.push_back(p);
        prev = p;
        ++row;
    }
    res.rank = row;
    return res;
}

} // namespace hodge

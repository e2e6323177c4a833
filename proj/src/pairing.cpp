#include "hodgeloci/pairing.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hodge {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::string entryKind(const Scalar& s) {
    bool hasConst = s.num.coeff(0) != 0;
    bool hasNu = s.num.degree() >= 1;
    if (hasConst && hasNu) return "c+nu";
    if (hasNu) return "nu";
    return "c";
}

std::vector<std::vector<NuPoly>> blockMatrix(const GramReport& g, const GramBlock& b) {
    std::vector<std::vector<NuPoly>> m(b.rowIdx.size(), std::vector<NuPoly>(b.colIdx.size()));
    for (size_t i = 0; i < b.rowIdx.size(); ++i)
        for (size_t j = 0; j < b.colIdx.size(); ++j)
            m[i][j] = g.entries[b.rowIdx[i]][b.colIdx[j]].num;
    return m;
}

DenseMatrix evaluateAt(const GramReport& g, const Rational& nu0) {
    DenseMatrix m(static_cast<int>(g.rows.size()), static_cast<int>(g.cols.size()));
    for (size_t i = 0; i < g.rows.size(); ++i)
        for (size_t j = 0; j < g.cols.size(); ++j)
            m[static_cast<int>(i)][static_cast<int>(j)] = evaluate_parameter(g.entries[i][j], nu0);
    return m;
}

} // namespace

Rational pairing_value(const AssociatedIdeal& assoc, const Polynomial& p, const Polynomial& q) {
    auto dp = p.homogeneousDegree(), dq = q.homogeneousDegree();
    if (!dp || !dq || *dp + *dq != assoc.socleDegree)
        throw std::invalid_argument("pairing_value: degrees must sum to the socle degree");
    const std::vector<Rational>& table = assoc.ideal.socleTableAt(assoc.socleDegree);
    const DegreeBasis& bS = assoc.ideal.ring()->at(assoc.socleDegree);
    Rational v(0);
    for (const auto& [mp, cp] : p.terms())
        for (const auto& [mq, cq] : q.terms()) v += cp * cq * table[bS.index(mp * mq)];
    return v;
}

GramReport gram_matrix(const AssociatedIdeal& i1, const AssociatedIdeal& i2, int rowDegree,
                       int colDegree) {
    if (i1.socleDegree != i2.socleDegree)
        throw std::invalid_argument("gram_matrix: socle degree mismatch");
    const int s = i1.socleDegree;
    if (rowDegree + colDegree != s)
        throw std::invalid_argument("gram_matrix: row and column degrees must sum to " +
                                    std::to_string(s));
    GramReport g;
    g.rowDegree = rowDegree;
    g.colDegree = colDegree;
    g.rows = intersection_quotient_basis(i1.ideal, i2.ideal, rowDegree);
    g.cols = intersection_quotient_basis(i1.ideal, i2.ideal, colDegree);
    const std::vector<Rational>& t1 = i1.ideal.socleTableAt(s);
    const std::vector<Rational>& t2 = i2.ideal.socleTableAt(s);
    const DegreeBasis& bS = i1.ideal.ring()->at(s);
    const NuPoly nu = NuPoly::nu();
    g.entries.assign(g.rows.size(), std::vector<Scalar>(g.cols.size()));
    for (size_t i = 0; i < g.rows.size(); ++i) {
        bool zeroRow = true;
        for (size_t j = 0; j < g.cols.size(); ++j) {
            int idx = bS.index(g.rows[i] * g.cols[j]);
            Scalar e(NuPoly(t1[idx]) + nu * NuPoly(t2[idx]));
            if (!e.isZero()) zeroRow = false;
            g.entries[i][j] = std::move(e);
        }
        if (zeroRow) g.hasZeroRow = true;
    }
    // bipartite connected components of the nonzero pattern
    const int nr = static_cast<int>(g.rows.size()), nc = static_cast<int>(g.cols.size());
    UnionFind uf(nr + nc);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j)
            if (!g.entries[i][j].isZero()) uf.unite(i, nr + j);
    std::map<int, GramBlock> comps;
    for (int i = 0; i < nr; ++i) comps[uf.find(i)].rowIdx.push_back(i);
    for (int j = 0; j < nc; ++j) comps[uf.find(nr + j)].colIdx.push_back(j);
    for (auto& [root, blk] : comps) {
        if (blk.rowIdx.empty() && blk.colIdx.empty()) continue;
        auto m = blockMatrix(g, blk);
        if (!blk.rowIdx.empty() && !blk.colIdx.empty()) {
            BareissResult br = bareiss_rank(m);
            blk.genericRank = br.rank;
            blk.pivots = std::move(br.pivots);
        }
        if (blk.rowIdx.size() == blk.colIdx.size()) {
            if (blk.genericRank == static_cast<int>(blk.rowIdx.size()) && !blk.pivots.empty())
                blk.determinant = blk.pivots.back().str(); // Bareiss: last pivot = det up to row swaps
            else
                blk.determinant = "0";
        }
        std::vector<std::string> kinds;
        for (int ri : blk.rowIdx)
            for (int cj : blk.colIdx)
                if (!g.entries[ri][cj].isZero()) kinds.push_back(entryKind(g.entries[ri][cj]));
        std::sort(kinds.begin(), kinds.end());
        std::ostringstream os;
        os << blk.rowIdx.size() << "x" << blk.colIdx.size() << ":";
        for (size_t t = 0; t < kinds.size(); ++t) os << (t ? "," : "") << kinds[t];
        blk.shape = os.str();
        g.genericRank += blk.genericRank;
        g.blocks.push_back(std::move(blk));
    }
    // sort blocks by their first row (then col) for deterministic reports
    std::sort(g.blocks.begin(), g.blocks.end(), [](const GramBlock& a, const GramBlock& b) {
        int ra = a.rowIdx.empty() ? -1 : a.rowIdx[0];
        int rb = b.rowIdx.empty() ? -1 : b.rowIdx[0];
        if (ra != rb) return ra < rb;
        int ca = a.colIdx.empty() ? -1 : a.colIdx[0];
        int cb = b.colIdx.empty() ? -1 : b.colIdx[0];
        return ca < cb;
    });
    g.criticalNus = critical_nu_values(g);
    for (const auto& blk : g.blocks)
        for (const auto& p : blk.pivots) {
            NuPoly rest = p.withoutRationalRoots();
            if (!rest.isConstant()) g.irrationalCriticalFactors.push_back(rest.str());
        }
    std::sort(g.irrationalCriticalFactors.begin(), g.irrationalCriticalFactors.end());
    g.irrationalCriticalFactors.erase(
        std::unique(g.irrationalCriticalFactors.begin(), g.irrationalCriticalFactors.end()),
        g.irrationalCriticalFactors.end());
    return g;
}

long rank_at(const GramReport& g, const Rational& nu0) {
    if (g.rows.empty() || g.cols.empty()) return 0;
    return dense_rank(evaluateAt(g, nu0));
}

int generic_rank(const GramReport& g) {
    // certify the symbolic rank by two evaluations away from pivot roots
    std::set<Rational> avoid;
    for (const auto& blk : g.blocks)
        for (const auto& p : blk.pivots)
            for (const auto& r : p.rationalRoots()) avoid.insert(r);
    int found = 0;
    for (long num = 17; found < 2; num += 12) {
        Rational probe(num, 7);
        probe.canonicalize();
        if (avoid.count(probe)) continue;
        if (rank_at(g, probe) != g.genericRank)
            throw std::logic_error("generic rank certification failed at nu = " + to_string(probe));
        ++found;
    }
    return g.genericRank;
}

std::vector<CriticalNu> critical_nu_values(const GramReport& g) {
    std::set<Rational> candidates;
    for (const auto& blk : g.blocks)
        for (const auto& p : blk.pivots)
            for (const auto& r : p.rationalRoots()) candidates.insert(r);
    std::vector<CriticalNu> out;
    for (const auto& nu0 : candidates) {
        long r = rank_at(g, nu0);
        if (r < g.genericRank) out.push_back({nu0, static_cast<int>(g.genericRank - r)});
    }
    return out;
}

std::vector<std::vector<Rational>> left_kernel_at(const GramReport& g, const Rational& nu0) {
    DenseMatrix m = evaluateAt(g, nu0);
    auto kernel = dense_left_nullspace(m);
    for (const auto& w : kernel) {
        for (int j = 0; j < m.ncols; ++j) {
            Rational v(0);
            for (int i = 0; i < m.nrows; ++i) v += w[i] * m[i][j];
            if (v != 0) throw std::logic_error("left kernel witness failed verification");
        }
    }
    return kernel;
}

ThmTspResult thmTsp_criterion(const AssociatedIdeal& i1, const AssociatedIdeal& i2, int d, int k) {
    ThmTspResult res;
    const int colDegree = k * d - 2 * k - 2;
    if (d > colDegree) return res; // infeasible, reported rather than erroneous
    res.feasible = true;
    const int s = (k + 1) * (d - 2);
    const auto& ring = i1.ideal.ring();
    const std::vector<Rational>& t2 = i2.ideal.socleTableAt(s);
    const DegreeBasis& bS = ring->at(s);
    // representatives of a basis of ((I1+I2)/I2)_t
    auto quotientReps = [&](int t) {
        Echelon e = i2.ideal.spanAt(t);
        std::vector<SparseRow> reps;
        i1.ideal.spanAt(t).forEachRow([&](const SparseRow& row) {
            int piv = e.insert(row);
            if (piv >= 0) reps.push_back(e.pivotRow(piv));
        });
        return reps;
    };
    std::vector<SparseRow> rowReps = quotientReps(d);
    std::vector<SparseRow> colReps = quotientReps(colDegree);
    res.rows = static_cast<int>(rowReps.size());
    res.cols = static_cast<int>(colReps.size());
    const DegreeBasis& bRow = ring->at(d);
    const DegreeBasis& bCol = ring->at(colDegree);
    DenseMatrix gram(res.rows, res.cols);
    for (int i = 0; i < res.rows; ++i)
        for (int j = 0; j < res.cols; ++j) {
            Rational v(0);
            for (const auto& [a, ca] : rowReps[i])
                for (const auto& [b, cb] : colReps[j]) v += ca * cb * t2[bS.index(bRow[a] * bCol[b])];
            gram[i][j] = v;
        }
    auto kernel = dense_left_nullspace(gram);
    if (kernel.empty()) {
        res.noLeftKernel = true;
    } else {
        res.witness = kernel.front();
    }
    return res;
}

ExcessReport excess_report(const GramReport& g, long jointCodim,
                           const std::vector<Rational>& nuSamples) {
    ExcessReport rep;
    rep.tangentCodimJoint = jointCodim;
    rep.genericExcess = static_cast<long>(g.rows.size()) - g.genericRank;
    for (const auto& nu0 : nuSamples) {
        ExcessVerdict v;
        v.nu = nu0;
        v.rank = rank_at(g, nu0);
        v.excess = static_cast<long>(g.rows.size()) - v.rank;
        v.combinedCodim = jointCodim - v.excess;
        v.isExcess = v.excess > 0;
        rep.perNu.push_back(std::move(v));
    }
    return rep;
}

} // namespace hodge

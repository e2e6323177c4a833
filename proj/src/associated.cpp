#include "hodgeloci/associated.hpp"

#include <algorithm>
#include <stdexcept>

namespace hodge {

namespace {

// invert a square rational matrix (throws if singular)
DenseMatrix dense_inverse(DenseMatrix m) {
    int n = m.nrows;
    DenseMatrix inv(n, n);
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (m[r][col] != 0) { piv = r; break; }
        if (piv < 0) throw std::invalid_argument("singular matrix");
        std::swap(m.a[col], m.a[piv]);
        std::swap(inv.a[col], inv.a[piv]);
        Rational lc = m[col][col];
        for (int c = 0; c < n; ++c) { m[col][c] /= lc; inv[col][c] /= lc; }
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (int c = 0; c < n; ++c) { m[r][c] -= f * m[col][c]; inv[r][c] -= f * inv[col][c]; }
        }
    }
    return inv;
}

std::vector<Rational> linearCoeffs(const Polynomial& l) {
    if (l.homogeneousDegree() != 1)
        throw std::invalid_argument("plane form is not linear homogeneous");
    std::vector<Rational> c(l.numVars(), Rational(0));
    for (const auto& [m, v] : l.terms())
        for (int i = 0; i < l.numVars(); ++i)
            if (m.exps[i] == 1) c[i] = v;
    return c;
}

} // namespace

std::vector<Polynomial> plane_decomposition(const Polynomial& f, const LinearSpacePlane& plane) {
    const int n = f.numVars();
    const int r = static_cast<int>(plane.linearForms.size());
    // coordinate matrix of the forms; must have full rank r
    std::vector<std::vector<Rational>> rows;
    for (const auto& l : plane.linearForms) rows.push_back(linearCoeffs(l));
    {
        DenseMatrix chk(r, n);
        for (int i = 0; i < r; ++i) chk.a[i] = rows[i];
        if (dense_rank(chk) != r)
            throw std::invalid_argument("plane_decomposition: dependent linear forms");
    }
    // extend to a change of coordinates y = A x with y_0..y_{r-1} the forms
    DenseMatrix A(n, n);
    int have = r;
    for (int i = 0; i < r; ++i) A.a[i] = rows[i];
    for (int j = 0; j < n && have < n; ++j) {
        DenseMatrix chk(have + 1, n);
        for (int i = 0; i < have; ++i) chk.a[i] = A.a[i];
        chk[have][j] = 1;
        if (dense_rank(std::move(chk)) == have + 1) {
            A[have][j] = 1;
            ++have;
        }
    }
    DenseMatrix Ainv = dense_inverse(A);
    // F(y) = f(A^{-1} y)
    std::vector<Polynomial> xImages;
    for (int i = 0; i < n; ++i) {
        Polynomial img(n);
        for (int j = 0; j < n; ++j)
            if (Ainv[i][j] != 0) img.addTerm(Monomial::var(n, j), Ainv[i][j]);
        xImages.push_back(img);
    }
    Polynomial F = f.substitute(xImages);
    // split terms by the first dividing y_i, i < r
    std::vector<Polynomial> cof(r, Polynomial(n));
    for (const auto& [m, c] : F.terms()) {
        int i = 0;
        while (i < r && m.exps[i] == 0) ++i;
        if (i == r)
            throw std::invalid_argument("plane_decomposition: f is not in the ideal of the plane");
        Monomial q(m);
        q.exps[i] -= 1;
        cof[i].addTerm(q, c);
    }
    // map back: y_j = (A x)_j
    std::vector<Polynomial> yImages;
    for (int j = 0; j < n; ++j) {
        Polynomial img(n);
        for (int l = 0; l < n; ++l)
            if (A[j][l] != 0) img.addTerm(Monomial::var(n, l), A[j][l]);
        yImages.push_back(img);
    }
    std::vector<Polynomial> gs;
    for (int i = 0; i < r; ++i) gs.push_back(cof[i].substitute(yImages));
    // exact re-expansion check
    Polynomial recon(n);
    for (int i = 0; i < r; ++i) recon = recon + plane.linearForms[i] * gs[i];
    if (recon != f)
        throw std::logic_error("plane_decomposition: re-expansion mismatch");
    return gs;
}

AssociatedIdeal associated_ideal_from_decomposition(std::shared_ptr<BasisCache> ring,
                                                    const std::vector<Polynomial>& ells,
                                                    const std::vector<Polynomial>& gs) {
    if (ells.size() != gs.size() || ells.empty())
        throw std::invalid_argument("associated ideal: need k+1 forms and k+1 cofactors");
    const int k = static_cast<int>(ells.size()) - 1;
    if (ring->numVars() != 2 * k + 2)
        throw std::invalid_argument("associated ideal: ambient ring must have 2k+2 variables");
    int d = -1;
    for (const auto& g : gs) {
        auto dg = g.homogeneousDegree();
        if (!dg) throw std::invalid_argument("associated ideal: cofactor not homogeneous");
        if (d < 0) d = *dg + 1;
        else if (*dg + 1 != d) throw std::invalid_argument("associated ideal: cofactor degree mismatch");
    }
    if (k * (d - 2) < 2)
        throw std::invalid_argument("associated ideal: requires d >= 2 + 2/k");
    std::vector<Polynomial> gens = ells;
    for (const auto& g : gs) gens.push_back(g);
    AssociatedIdeal out{IdealModel(ring, std::move(gens)), k, d, (k + 1) * (d - 2), Monomial()};
    const int s = out.socleDegree;
    // regular sequence <=> Artinian quotient of length prod deg = (d-1)^{k+1}
    long total = 0;
    for (int t = 0; t <= s; ++t) total += out.ideal.hilbert(t);
    long expected = 1;
    for (int i = 0; i <= k; ++i) expected *= (d - 1);
    if (out.ideal.hilbert(s + 1) != 0 || total != expected)
        throw std::invalid_argument(
            "associated ideal: generators are not a regular sequence (quotient length " +
            std::to_string(total) + ", expected " + std::to_string(expected) + ")");
    out.socleGenerator = out.ideal.socleMonomialAt(s);
    return out;
}

AssociatedIdeal associated_ideal_general(std::shared_ptr<BasisCache> ring, const Polynomial& f,
                                         const Polynomial& fGamma) {
    const int n = ring->numVars();
    if (n % 2 != 0) throw std::invalid_argument("ambient ring must have 2k+2 variables");
    const int k = n / 2 - 1;
    auto dOpt = f.homogeneousDegree();
    if (!dOpt) throw std::invalid_argument("f must be homogeneous");
    const int d = *dOpt;
    const int s = (k + 1) * (d - 2);
    if (fGamma.homogeneousDegree() != s)
        throw std::invalid_argument("class representative must have degree (k+1)(d-2)");
    if (!is_smooth(f).smooth)
        throw std::invalid_argument("associated_ideal_general: hypersurface is singular");

    IdealModel J = jacobian_ideal(ring, f);
    const int top = 2 * s; // (d-2)(2k+2), socle degree of S/J
    const std::vector<Rational>& jTable = J.socleTableAt(top);
    const DegreeBasis& bTop = ring->at(top);
    const DegreeBasis& bS = ring->at(s);

    // dual functional phi on S_s: phi(m) = socle pairing of m with fGamma
    std::vector<Rational> phi(bS.size(), Rational(0));
    bool phiZero = true;
    for (int i = 0; i < bS.size(); ++i) {
        Rational v(0);
        for (const auto& [m, c] : fGamma.terms()) v += c * jTable[bTop.index(bS[i] * m)];
        phi[i] = v;
        if (v != 0) phiZero = false;
    }
    if (phiZero)
        throw std::invalid_argument("associated_ideal_general: class representative lies in J "
                                    "(primitive part vanishes)");
    // J_s is contained in W = ker phi
    bool jInW = true;
    J.spanAt(s).forEachRow([&](const SparseRow& row) {
        Rational v(0);
        for (const auto& [c, x] : row) v += x * phi[c];
        if (v != 0) jInW = false;
    });
    if (!jInW) throw std::logic_error("associated_ideal_general: J_s not contained in W");

    // ancestor ideal by catalecticant kernels: h in I_t iff phi(h*m) = 0 for
    // every monomial m of degree s - t
    std::map<int, std::vector<SparseRow>> spans;
    for (int t = 0; t <= s; ++t) {
        const DegreeBasis& bt = ring->at(t);
        const DegreeBasis& bc = ring->at(s - t);
        DenseMatrix cat(bc.size(), bt.size());
        for (int i = 0; i < bc.size(); ++i)
            for (int j = 0; j < bt.size(); ++j) cat[i][j] = phi[bS.index(bc[i] * bt[j])];
        std::vector<SparseRow> rows;
        for (const auto& v : dense_nullspace(std::move(cat))) {
            SparseRow row;
            for (int j = 0; j < bt.size(); ++j)
                if (v[j] != 0) row.emplace_back(j, v[j]);
            rows.push_back(std::move(row));
        }
        spans.emplace(t, std::move(rows));
    }
    AssociatedIdeal out{IdealModel::fromSpans(ring, std::move(spans), s), k, d, s, Monomial()};
    out.socleGenerator = out.ideal.socleMonomialAt(s);
    return out;
}

Polynomial class_representative_from_ideal(const AssociatedIdeal& assoc, const Polynomial& f) {
    const auto& ring = assoc.ideal.ring();
    const int s = assoc.socleDegree;
    const int top = 2 * s;
    IdealModel J = jacobian_ideal(ring, f);
    const std::vector<Rational>& jTable = J.socleTableAt(top);
    const DegreeBasis& bTop = ring->at(top);
    const DegreeBasis& bS = ring->at(s);
    // work in (S/J)_s: quotient coordinates via the standard monomials of J
    const Echelon& jSpan = J.spanAt(s);
    std::vector<int> stdCols = jSpan.standardColumns();
    std::map<int, int> stdIdx;
    for (size_t i = 0; i < stdCols.size(); ++i) stdIdx.emplace(stdCols[i], static_cast<int>(i));
    const int q = static_cast<int>(stdCols.size());
    // image of W = (I)_s in the quotient
    Echelon wBar(q);
    assoc.ideal.spanAt(s).forEachRow([&](const SparseRow& row) {
        SparseRow res = jSpan.reduce(row);
        SparseRow v;
        for (const auto& [c, x] : res) v.emplace_back(stdIdx.at(c), x);
        wBar.insert(std::move(v));
    });
    if (wBar.rank() != q - 1)
        throw std::logic_error("class representative: W does not have codimension 1 in S/J");
    // perfect pairing on (S/J)_s
    DenseMatrix P(q, q);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            P[i][j] = jTable[bTop.index(bS[stdCols[i]] * bS[stdCols[j]])];
    DenseMatrix A(q - 1, q);
    int r = 0;
    wBar.forEachRow([&](const SparseRow& row) {
        for (int j = 0; j < q; ++j) {
            Rational v(0);
            for (const auto& [i, x] : row) v += x * P[i][j];
            A[r][j] = v;
        }
        ++r;
    });
    auto ns = dense_nullspace(std::move(A));
    if (ns.size() != 1)
        throw std::logic_error("class representative: perp of W is not one-dimensional");
    Polynomial fGamma(assoc.ideal.numVars());
    for (int i = 0; i < q; ++i)
        if (ns[0][i] != 0) fGamma.addTerm(bS[stdCols[i]], ns[0][i]);
    return fGamma;
}

GorensteinReport check_gorenstein(const AssociatedIdeal& assoc) {
    GorensteinReport rep;
    const int s = assoc.socleDegree;
    for (int t = 0; t <= s; ++t) rep.hilbertVector.push_back(assoc.ideal.hilbert(t));
    if (rep.hilbertVector[s] != 1) {
        rep.failedDegree = s;
        rep.failure = "socle is not one-dimensional";
        return rep;
    }
    if (assoc.ideal.hilbert(s + 1) != 0) {
        rep.failedDegree = s + 1;
        rep.failure = "quotient does not vanish beyond the socle degree";
        return rep;
    }
    for (int t = 0; t <= s; ++t) {
        if (rep.hilbertVector[t] != rep.hilbertVector[s - t]) {
            rep.failedDegree = t;
            rep.failure = "Hilbert vector is not symmetric";
            return rep;
        }
    }
    const std::vector<Rational>& table = assoc.ideal.socleTableAt(s);
    const auto& ring = assoc.ideal.ring();
    const DegreeBasis& bS = ring->at(s);
    for (int t = 0; t <= s / 2; ++t) {
        std::vector<Monomial> rowsB = assoc.ideal.quotientBasis(t);
        std::vector<Monomial> colsB = assoc.ideal.quotientBasis(s - t);
        DenseMatrix gram(static_cast<int>(rowsB.size()), static_cast<int>(colsB.size()));
        for (size_t i = 0; i < rowsB.size(); ++i)
            for (size_t j = 0; j < colsB.size(); ++j)
                gram[static_cast<int>(i)][static_cast<int>(j)] = table[bS.index(rowsB[i] * colsB[j])];
        if (dense_rank(std::move(gram)) != static_cast<int>(rowsB.size())) {
            rep.failedDegree = t;
            rep.failure = "multiplication pairing degenerate in degree " + std::to_string(t);
            return rep;
        }
    }
    rep.ok = true;
    return rep;
}

long tangent_codim(const AssociatedIdeal& assoc, int d) { return assoc.ideal.hilbert(d); }

long joint_tangent_codim(const std::vector<const AssociatedIdeal*>& ideals, int d) {
    if (ideals.empty()) throw std::invalid_argument("joint_tangent_codim: empty list");
    const auto& ring = ideals[0]->ideal.ring();
    Echelon cur = ideals[0]->ideal.spanAt(d);
    for (size_t i = 1; i < ideals.size(); ++i)
        cur = echelon_intersect(cur, ideals[i]->ideal.spanAt(d));
    return ring->at(d).size() - cur.rank();
}

} // namespace hodge

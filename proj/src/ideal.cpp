#include "hodgeloci/ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace hodge {

const DegreeBasis& BasisCache::at(int degree) const {
    auto it = cache_.find(degree);
    if (it == cache_.end())
        it = cache_.emplace(degree, DegreeBasis(numVars_, degree, order_)).first;
    return it->second;
}

IdealModel::IdealModel(std::shared_ptr<BasisCache> ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)) {
    for (auto& g : generators) {
        if (g.isZero()) continue;
        if (!g.homogeneousDegree())
            throw std::invalid_argument("IdealModel: generators must be homogeneous");
        gens_.push_back(std::move(g));
    }
}

IdealModel IdealModel::fromSpans(std::shared_ptr<BasisCache> ring,
                                 std::map<int, std::vector<SparseRow>> spans, int fullAbove) {
    IdealModel m(std::move(ring), {});
    m.hasGens_ = false;
    m.explicitSpans_ = std::move(spans);
    m.fullAbove_ = fullAbove;
    return m;
}

Echelon IdealModel::buildSpan(int degree) const {
    const DegreeBasis& basis = ring_->at(degree);
    Echelon ech(basis.size());
    if (!hasGens_) {
        if (fullAbove_ >= 0 && degree > fullAbove_) {
            for (int c = 0; c < basis.size(); ++c) ech.insertUnit(c);
            return ech;
        }
        auto it = explicitSpans_.find(degree);
        if (it != explicitSpans_.end())
            for (const auto& row : it->second) ech.insert(row);
        return ech;
    }
    for (const auto& g : gens_) {
        int dg = *g.homogeneousDegree();
        if (dg > degree) continue;
        if (g.numTerms() == 1) {
            // monomial generator: its multiples are exactly the divisible columns
            const Monomial lt = g.terms().begin()->first;
            for (int c = 0; c < basis.size(); ++c)
                if (lt.divides(basis[c])) ech.insertUnit(c);
            continue;
        }
        for (const auto& m : enumerate_monomials(numVars(), degree - dg, ring_->order())) {
            SparseRow row;
            bool skip = false;
            for (const auto& [gm, gc] : g.terms()) {
                int idx = basis.index(gm * m);
                if (idx < 0) { skip = true; break; }
                row.emplace_back(idx, gc);
            }
            if (skip) continue;
            std::sort(row.begin(), row.end());
            ech.insert(std::move(row));
        }
    }
    return ech;
}

const Echelon& IdealModel::spanAt(int degree) const {
    auto it = spanCache_.find(degree);
    if (it == spanCache_.end()) it = spanCache_.emplace(degree, buildSpan(degree)).first;
    return it->second;
}

long IdealModel::hilbert(int degree) const {
    if (degree < 0) return 0;
    return ring_->at(degree).size() - dimAt(degree);
}

std::vector<Monomial> IdealModel::quotientBasis(int degree) const {
    const DegreeBasis& basis = ring_->at(degree);
    std::vector<Monomial> out;
    for (int c : spanAt(degree).standardColumns()) out.push_back(basis[c]);
    return out;
}

const GroebnerBasis& IdealModel::groebner() const {
    if (!hasGens_)
        throw std::logic_error("Groebner basis requested for a span-only ideal");
    if (!gb_) gb_ = buchberger(gens_, ring_->order());
    return *gb_;
}

long IdealModel::hilbertGroebner(int degree) const {
    if (degree < 0) return 0;
    return groebner_hilbert(groebner(), numVars(), degree);
}

bool IdealModel::containsDegreewise(const Polynomial& p) const {
    if (p.isZero()) return true;
    auto d = p.homogeneousDegree();
    if (!d) throw std::invalid_argument("containsDegreewise: not homogeneous");
    const DegreeBasis& basis = ring_->at(*d);
    return spanAt(*d).contains(basis.toRow(p));
}

const std::vector<Rational>& IdealModel::socleTableAt(int degree) const {
    auto it = socleCache_.find(degree);
    if (it == socleCache_.end()) {
        const Echelon& ech = spanAt(degree);
        std::vector<int> std_ = ech.standardColumns();
        if (std_.size() != 1)
            throw std::logic_error("socleTableAt: quotient is not one-dimensional (dim " +
                                   std::to_string(std_.size()) + ")");
        int socleCol = std_[0];
        it = socleCache_
                 .emplace(degree, std::make_pair(ring_->at(degree)[socleCol],
                                                 ech.socleTable(socleCol)))
                 .first;
    }
    return it->second.second;
}

const Monomial& IdealModel::socleMonomialAt(int degree) const {
    socleTableAt(degree);
    return socleCache_.at(degree).first;
}

IdealModel ideal_sum(const IdealModel& a, const IdealModel& b) {
    if (a.numVars() != b.numVars())
        throw std::invalid_argument("ideal_sum: ambient ring mismatch");
    if (!a.hasGenerators() || !b.hasGenerators())
        throw std::invalid_argument("ideal_sum: needs generator presentations");
    std::vector<Polynomial> gens = a.generators();
    for (const auto& g : b.generators()) gens.push_back(g);
    return IdealModel(a.ring(), std::move(gens));
}

IdealModel jacobian_ideal(std::shared_ptr<BasisCache> ring, const Polynomial& f) {
    auto d = f.homogeneousDegree();
    if (!d || *d < 2) throw std::invalid_argument("jacobian_ideal: need homogeneous f of degree >= 2");
    std::vector<Polynomial> gens;
    for (int i = 0; i < f.numVars(); ++i) gens.push_back(partial_derivative(f, i));
    return IdealModel(std::move(ring), std::move(gens));
}

Echelon ideal_intersection_degreewise(const IdealModel& a, const IdealModel& b, int t) {
    if (a.numVars() != b.numVars())
        throw std::invalid_argument("intersection: ambient ring mismatch");
    return echelon_intersect(a.spanAt(t), b.spanAt(t));
}

long intersection_hilbert(const IdealModel& a, const IdealModel& b, int t) {
    if (t < 0) return 0;
    return a.ring()->at(t).size() - ideal_intersection_degreewise(a, b, t).rank();
}

std::vector<Monomial> intersection_quotient_basis(const IdealModel& a, const IdealModel& b, int t) {
    const DegreeBasis& basis = a.ring()->at(t);
    std::vector<Monomial> out;
    for (int c : ideal_intersection_degreewise(a, b, t).standardColumns()) out.push_back(basis[c]);
    return out;
}

SmoothnessReport is_smooth(const Polynomial& f) {
    auto d = f.homogeneousDegree();
    if (!d || *d < 1) throw std::invalid_argument("is_smooth: need a nonzero homogeneous f");
    std::vector<Polynomial> gens;
    for (int i = 0; i < f.numVars(); ++i) gens.push_back(partial_derivative(f, i));
    // mod-p Artinian quotients certify smoothness (specializing can only
    // shrink the quotient); fall back to the exact engine if inconclusive
    for (unsigned long p : {1000003UL, 2000003UL, 3000017UL}) {
        bool ok = true;
        for (const auto& g : gens)
            for (const auto& [m, c] : g.terms())
                if (mpz_fdiv_ui(c.get_den().get_mpz_t(), p) == 0) { ok = false; break; }
        if (!ok) continue;
        ArtinianCheck chk = modp_artinian_check(gens, p);
        if (chk.artinian) return {true, chk.vanishingDegree};
    }
    ArtinianCheck chk = artinian_check_exact(gens);
    return {chk.artinian, chk.vanishingDegree};
}

std::vector<Polynomial> intersection_elimination_oracle(const std::vector<Polynomial>& gens1,
                                                        const std::vector<Polynomial>& gens2,
                                                        int numVars) {
    // embed in S[u] with u the extra last variable, eliminated first
    int n = numVars + 1;
    int uIdx = numVars;
    auto lift = [&](const Polynomial& p) {
        Polynomial out(n);
        for (const auto& [m, c] : p.terms()) {
            Monomial mm(n);
            for (int i = 0; i < numVars; ++i) mm.exps[i] = m.exps[i];
            out.addTerm(mm, c);
        }
        return out;
    };
    Polynomial u = Polynomial::variable(n, uIdx);
    Polynomial oneMinusU = Polynomial::constant(n, Rational(1)) - u;
    std::vector<Polynomial> gens;
    for (const auto& g : gens1) gens.push_back(u * lift(g));
    for (const auto& g : gens2) gens.push_back(oneMinusU * lift(g));
    MonomialOrder elim;
    elim.elimVars = 1;
    elim.perm.resize(n);
    elim.perm[uIdx] = 0; // u is the eliminated block
    for (int i = 0; i < numVars; ++i) elim.perm[i] = i + 1;
    GroebnerBasis gb = buchberger(gens, elim);
    std::vector<Polynomial> result;
    for (const auto& g : gb.basis) {
        bool hasU = false;
        for (const auto& [m, c] : g.terms())
            if (m.exps[uIdx] > 0) { hasU = true; break; }
        if (hasU) continue;
        Polynomial out(numVars);
        for (const auto& [m, c] : g.terms()) {
            Monomial mm(numVars);
            for (int i = 0; i < numVars; ++i) mm.exps[i] = m.exps[i];
            out.addTerm(mm, c);
        }
        result.push_back(out);
    }
    return result;
}

} // namespace hodge

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "hodgeloci/groebner.hpp"
#include "hodgeloci/linalg.hpp"
#include "hodgeloci/polynomial.hpp"

namespace hodge {

// shared per-(numVars, degree, order) monomial bases
class BasisCache {
public:
    explicit BasisCache(int numVars, MonomialOrder order = MonomialOrder{})
        : numVars_(numVars), order_(std::move(order)) {}

    int numVars() const { return numVars_; }
    const MonomialOrder& order() const { return order_; }
    const DegreeBasis& at(int degree) const;

private:
    int numVars_;
    MonomialOrder order_;
    mutable std::map<int, DegreeBasis> cache_;
};

// Graded ideal: homogeneous generators plus cached per-degree echelon spans
// and an optional Groebner basis. Ancestor ideals may instead carry explicit
// spans for degrees <= socle and are full above it.
class IdealModel {
public:
    IdealModel(std::shared_ptr<BasisCache> ring, std::vector<Polynomial> generators);

    // generator-free graded-span ideal (full in every degree > fullAbove)
    static IdealModel fromSpans(std::shared_ptr<BasisCache> ring,
                                std::map<int, std::vector<SparseRow>> spans, int fullAbove);

    const std::shared_ptr<BasisCache>& ring() const { return ring_; }
    int numVars() const { return ring_->numVars(); }
    const std::vector<Polynomial>& generators() const { return gens_; }
    bool hasGenerators() const { return hasGens_; }

    const Echelon& spanAt(int degree) const;
    long dimAt(int degree) const { return spanAt(degree).rank(); }
    long hilbert(int degree) const; // dim (S/I)_t, degreewise engine
    std::vector<Monomial> quotientBasis(int degree) const;

    const GroebnerBasis& groebner() const; // computed on demand (requires generators)
    long hilbertGroebner(int degree) const;

    // membership of a homogeneous polynomial via the degreewise span
    bool containsDegreewise(const Polynomial& p) const;

    // socle-coefficient table at the given degree (requires a one-dimensional
    // quotient there); table[i] = coefficient of the socle monomial in NF(m_i)
    const std::vector<Rational>& socleTableAt(int degree) const;
    const Monomial& socleMonomialAt(int degree) const;

private:
    std::shared_ptr<BasisCache> ring_;
    std::vector<Polynomial> gens_;
    bool hasGens_ = true;
    std::map<int, std::vector<SparseRow>> explicitSpans_;
    int fullAbove_ = -1; // for span ideals: I_t = S_t for t > fullAbove_
    mutable std::map<int, Echelon> spanCache_;
    mutable std::optional<GroebnerBasis> gb_;
    mutable std::map<int, std::pair<Monomial, std::vector<Rational>>> socleCache_;

    Echelon buildSpan(int degree) const;
};

IdealModel ideal_sum(const IdealModel& a, const IdealModel& b);
IdealModel jacobian_ideal(std::shared_ptr<BasisCache> ring, const Polynomial& f);

// vector-space intersection (I1)_t /\ (I2)_t, echelonized
Echelon ideal_intersection_degreewise(const IdealModel& a, const IdealModel& b, int t);
long intersection_hilbert(const IdealModel& a, const IdealModel& b, int t);
std::vector<Monomial> intersection_quotient_basis(const IdealModel& a, const IdealModel& b, int t);

struct SmoothnessReport {
    bool smooth = false;
    int certificateDegree = -1; // degree where hilbert(J, t) vanishes
};
SmoothnessReport is_smooth(const Polynomial& f);

// Elimination-order intersection oracle (test use): Groebner basis of
// u*I1 + (1-u)*I2 in S[u], intersected with S.
std::vector<Polynomial> intersection_elimination_oracle(const std::vector<Polynomial>& gens1,
                                                        const std::vector<Polynomial>& gens2,
                                                        int numVars);

} // namespace hodge

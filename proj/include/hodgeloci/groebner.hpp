#pragma once

#include <vector>

#include "hodgeloci/polynomial.hpp"

namespace hodge {

struct GroebnerBasis {
    std::vector<Polynomial> basis; // reduced, monic, sorted by leading term
    MonomialOrder order;

    std::vector<Monomial> leadingTerms() const;
};

// Buchberger with the normal (lowest-lcm-degree) pair strategy and the
// coprime/chain criteria. Input generators need not be homogeneous, but all
// callers here pass graded ideals.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens,
                         const MonomialOrder& order = MonomialOrder{});

// remainder on division by the basis; no term divisible by any leading term
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

bool ideal_member(const Polynomial& p, const GroebnerBasis& gb);

// standard-monomial count of degree t (dimension of (S/I)_t)
long groebner_hilbert(const GroebnerBasis& gb, int numVars, int t);

// ---- mod-p engine (Artinian certificates only) ----

// Computes a Groebner basis of the reduction mod p and reports whether the
// quotient is Artinian (a pure power of every variable appears among the
// leading terms). Stops early once that certificate is reached. Returns the
// socle-degree bound sum(m_i - 1) + 1 on success.
struct ArtinianCheck {
    bool artinian = false;
    int vanishingDegree = -1;
};
ArtinianCheck modp_artinian_check(const std::vector<Polynomial>& gens, unsigned long p);

// Exact variant over Q (used when the mod-p certificate is inconclusive).
ArtinianCheck artinian_check_exact(const std::vector<Polynomial>& gens);

} // namespace hodge

#pragma once

#include <memory>
#include <vector>

#include "hodgeloci/ideal.hpp"

namespace hodge {

// Pi = V(l_0, ..., l_k), a k-plane in P^{2k+1}
struct LinearSpacePlane {
    std::vector<Polynomial> linearForms;

    int k() const { return static_cast<int>(linearForms.size()) - 1; }
};

struct AssociatedIdeal {
    IdealModel ideal;
    int k = 0;
    int d = 0;
    int socleDegree = 0; // (k+1)(d-2)
    Monomial socleGenerator;
};

// cofactors g_i of degree d-1 with sum l_i * g_i = f (requires f in <l>)
std::vector<Polynomial> plane_decomposition(const Polynomial& f, const LinearSpacePlane& plane);

// <l_0..l_k, g_0..g_k>; verifies the regular-sequence/Artinian-length
// contract (total quotient dimension (d-1)^{k+1}) and the socle structure
AssociatedIdeal associated_ideal_from_decomposition(std::shared_ptr<BasisCache> ring,
                                                    const std::vector<Polynomial>& ells,
                                                    const std::vector<Polynomial>& gs);

// Macaulay-dual construction: W = perp of fGamma under the socle pairing of
// S/J in degree s = (k+1)(d-2), then the largest graded ideal with that
// degree-s piece (catalecticant kernels of the dual functional).
AssociatedIdeal associated_ideal_general(std::shared_ptr<BasisCache> ring, const Polynomial& f,
                                         const Polynomial& fGamma);

// dual functional representative (unique up to scale) for the class whose
// associated ideal is the given one; inverts the general construction
Polynomial class_representative_from_ideal(const AssociatedIdeal& assoc, const Polynomial& f);

struct GorensteinReport {
    bool ok = false;
    std::vector<long> hilbertVector; // h(0..s)
    int failedDegree = -1;
    std::string failure;
};
GorensteinReport check_gorenstein(const AssociatedIdeal& assoc);

long tangent_codim(const AssociatedIdeal& assoc, int d);
long joint_tangent_codim(const std::vector<const AssociatedIdeal*>& ideals, int d);

} // namespace hodge

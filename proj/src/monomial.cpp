#include "hodgeloci/monomial.hpp"

#include <algorithm>

namespace hodge {

namespace {

void gen(int numVars, int var, int remaining, Monomial& cur, std::vector<Monomial>& out) {
    if (var == numVars - 1) {
        cur.exps[var] = remaining;
        out.push_back(cur);
        cur.exps[var] = 0;
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        cur.exps[var] = e;
        gen(numVars, var + 1, remaining - e, cur, out);
    }
    cur.exps[var] = 0;
}

} // namespace

std::vector<Monomial> enumerate_monomials(int numVars, int degree, const MonomialOrder& order) {
    std::vector<Monomial> out;
    Monomial cur(numVars);
    gen(numVars, 0, degree, cur, out);
    std::sort(out.begin(), out.end(),
              [&](const Monomial& a, const Monomial& b) { return order.greater(a, b); });
    return out;
}

} // namespace hodge

#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace hodge {

// Exponent vector of fixed length (= number of ambient variables).
struct Monomial {
    std::vector<int> exps;

    Monomial() = default;
    explicit Monomial(int numVars) : exps(numVars, 0) {}
    explicit Monomial(std::vector<int> e) : exps(std::move(e)) {}

    int numVars() const { return static_cast<int>(exps.size()); }
    int degree() const { return std::accumulate(exps.begin(), exps.end(), 0); }
    bool isOne() const {
        for (int e : exps) if (e != 0) return false;
        return true;
    }

    bool operator==(const Monomial& o) const { return exps == o.exps; }
    bool operator!=(const Monomial& o) const { return exps != o.exps; }
    // Container ordering only; Groebner/term order lives in MonomialOrder.
    bool operator<(const Monomial& o) const { return exps < o.exps; }

    Monomial operator*(const Monomial& o) const {
        if (numVars() != o.numVars()) throw std::invalid_argument("monomial arity mismatch");
        Monomial r(*this);
        for (int i = 0; i < numVars(); ++i) r.exps[i] += o.exps[i];
        return r;
    }

    bool divides(const Monomial& o) const {
        if (numVars() != o.numVars()) return false;
        for (int i = 0; i < numVars(); ++i) if (exps[i] > o.exps[i]) return false;
        return true;
    }

    // componentwise quotient; caller must ensure o.divides(*this)
    Monomial operator/(const Monomial& o) const {
        Monomial r(*this);
        for (int i = 0; i < numVars(); ++i) {
            r.exps[i] -= o.exps[i];
            if (r.exps[i] < 0) throw std::invalid_argument("monomial division not exact");
        }
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (int i = 0; i < a.numVars(); ++i) r.exps[i] = std::max(a.exps[i], b.exps[i]);
        return r;
    }

    static Monomial var(int numVars, int i, int power = 1) {
        Monomial m(numVars);
        m.exps[i] = power;
        return m;
    }
};

enum class OrderKind { GrevLex, GrLex };

// Total order refining degree; larger monomial compares greater.
// x0 is the biggest variable (after the optional permutation).
struct MonomialOrder {
    OrderKind kind = OrderKind::GrevLex;
    std::vector<int> perm; // perm[i] = rank of variable i; empty = identity
    // number of leading eliminated variables (block order, used by the
    // intersection oracle); 0 = plain graded order
    int elimVars = 0;

    int rankOf(int i) const { return perm.empty() ? i : perm[i]; }

    // -1 if a < b, 0 if equal, +1 if a > b
    int compare(const Monomial& a, const Monomial& b) const {
        const int n = a.numVars();
        if (elimVars > 0) {
            int da = 0, db = 0;
            for (int i = 0; i < n; ++i) {
                int r = rankOf(i);
                if (r < elimVars) { da += a.exps[i]; db += b.exps[i]; }
            }
            if (da != db) return da < db ? -1 : 1;
        }
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db ? -1 : 1;
        if (perm.empty()) {
            if (kind == OrderKind::GrLex) {
                for (int i = 0; i < n; ++i)
                    if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i] ? 1 : -1;
                return 0;
            }
            for (int i = n - 1; i >= 0; --i)
                if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i] ? 1 : -1;
            return 0;
        }
        std::vector<int> ea(n), eb(n);
        for (int i = 0; i < n; ++i) { ea[rankOf(i)] = a.exps[i]; eb[rankOf(i)] = b.exps[i]; }
        if (kind == OrderKind::GrLex) {
            for (int i = 0; i < n; ++i)
                if (ea[i] != eb[i]) return ea[i] > eb[i] ? 1 : -1;
            return 0;
        }
        // grevlex: last variable in which they differ, smaller exponent wins
        for (int i = n - 1; i >= 0; --i)
            if (ea[i] != eb[i]) return ea[i] < eb[i] ? 1 : -1;
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
};

// All monomials of the exact degree, sorted descending by the order.
std::vector<Monomial> enumerate_monomials(int numVars, int degree,
                                          const MonomialOrder& order = MonomialOrder{});

} // namespace hodge

#include "hodgeloci/groebner.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>

namespace hodge {

namespace {

struct QField {
    using Elem = Rational;
    Elem neg(const Elem& a) const { return -a; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem div(const Elem& a, const Elem& b) const { return a / b; }
    bool isZero(const Elem& a) const { return a == 0; }
    Elem one() const { return Rational(1); }
    Elem fromRational(const Rational& r) const { return r; }
    bool embeds(const Rational&) const { return true; }
};

struct PField {
    unsigned long p;
    using Elem = unsigned long;
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem add(Elem a, Elem b) const { return (a + b) % p; }
    Elem mul(Elem a, Elem b) const {
        return static_cast<unsigned long>(
            (static_cast<unsigned __int128>(a) * b) % p);
    }
    Elem inv(Elem a) const {
        // Fermat
        unsigned long r = 1, base = a % p, e = p - 2;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    bool isZero(Elem a) const { return a == 0; }
    Elem one() const { return 1; }
    Elem fromRational(const Rational& r) const {
        Integer num = r.get_num(), den = r.get_den();
        unsigned long n = mpz_fdiv_ui(num.get_mpz_t(), p);
        unsigned long d = mpz_fdiv_ui(den.get_mpz_t(), p);
        if (d == 0) throw std::domain_error("denominator divisible by p");
        return div(n, d);
    }
    bool embeds(const Rational& r) const {
        return mpz_fdiv_ui(r.get_den().get_mpz_t(), p) != 0;
    }
};

// terms sorted descending by the active order
template <typename F>
struct Engine {
    using C = typename F::Elem;
    using Term = std::pair<Monomial, C>;
    using Poly = std::vector<Term>;

    F field;
    MonomialOrder ord;

    Poly fromPolynomial(const Polynomial& p) const {
        Poly out;
        for (const auto& [m, c] : p.terms()) out.emplace_back(m, field.fromRational(c));
        std::sort(out.begin(), out.end(),
                  [&](const Term& a, const Term& b) { return ord.greater(a.first, b.first); });
        out.erase(std::remove_if(out.begin(), out.end(),
                                 [&](const Term& t) { return field.isZero(t.second); }),
                  out.end());
        return out;
    }

    // a - coef * mono * b
    Poly subMul(const Poly& a, const C& coef, const Monomial& mono, const Poly& b) const {
        Poly out;
        out.reserve(a.size() + b.size());
        size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size()) { out.push_back(a[i++]); continue; }
            Monomial mb = b[j].first * mono;
            int cmp = (i == a.size()) ? -1 : ord.compare(a[i].first, mb);
            if (cmp > 0) {
                out.push_back(a[i++]);
            } else if (cmp < 0) {
                C c = field.neg(field.mul(coef, b[j].second));
                if (!field.isZero(c)) out.emplace_back(mb, c);
                ++j;
            } else {
                C c = field.add(a[i].second, field.neg(field.mul(coef, b[j].second)));
                if (!field.isZero(c)) out.emplace_back(a[i].first, c);
                ++i; ++j;
            }
        }
        return out;
    }

    Poly makeMonic(Poly p) const {
        if (p.empty()) return p;
        C lc = p.front().second;
        for (auto& [m, c] : p) c = field.div(c, lc);
        return p;
    }

    Poly reduceFull(Poly h, const std::vector<Poly>& basis) const {
        Poly rem;
        while (!h.empty()) {
            const Monomial& m = h.front().first;
            bool reduced = false;
            for (const auto& g : basis) {
                if (g.empty()) continue;
                if (g.front().first.divides(m)) {
                    h = subMul(h, field.div(h.front().second, g.front().second),
                               m / g.front().first, g);
                    reduced = true;
                    break;
                }
            }
            if (!reduced) {
                rem.push_back(h.front());
                h.erase(h.begin());
            }
        }
        return rem;
    }

    Poly sPoly(const Poly& f, const Poly& g) const {
        Monomial l = Monomial::lcm(f.front().first, g.front().first);
        // l/LT(f) * f / lc(f)  -  l/LT(g) * g / lc(g)
        Poly a;
        Monomial mf = l / f.front().first;
        for (const auto& [m, c] : f) a.emplace_back(m * mf, field.div(c, f.front().second));
        return subMul(a, field.one(), l / g.front().first, makeMonic(g));
    }

    struct PairKey {
        int degree;
        int i, j;
        bool operator<(const PairKey& o) const {
            if (degree != o.degree) return degree < o.degree;
            if (i != o.i) return i < o.i;
            return j < o.j;
        }
    };

    // Buchberger main loop; stopEarly (optional) inspects the current
    // leading-term list and may terminate the loop
    std::vector<Poly> run(std::vector<Poly> basis,
                          const std::function<bool(const std::vector<Poly>&)>& stopEarly) const {
        basis.erase(std::remove_if(basis.begin(), basis.end(),
                                   [](const Poly& p) { return p.empty(); }),
                    basis.end());
        for (auto& b : basis) b = makeMonic(b);
        std::set<PairKey> queue;
        std::set<std::pair<int, int>> done;
        auto addPairs = [&](int k) {
            for (int i = 0; i < k; ++i) {
                Monomial l = Monomial::lcm(basis[i].front().first, basis[k].front().first);
                queue.insert({l.degree(), i, k});
            }
        };
        for (int k = 1; k < static_cast<int>(basis.size()); ++k) addPairs(k);
        if (stopEarly && stopEarly(basis)) return basis;
        while (!queue.empty()) {
            auto key = *queue.begin();
            queue.erase(queue.begin());
            int i = key.i, j = key.j;
            done.insert({i, j});
            const Monomial &li = basis[i].front().first, &lj = basis[j].front().first;
            Monomial l = Monomial::lcm(li, lj);
            // first criterion: coprime leading terms
            if (l.degree() == li.degree() + lj.degree()) continue;
            // chain criterion (conservative form: both companion pairs done)
            bool skip = false;
            for (int k = 0; k < static_cast<int>(basis.size()); ++k) {
                if (k == i || k == j) continue;
                if (!basis[k].front().first.divides(l)) continue;
                auto mk = [&](int a, int b) {
                    return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
                };
                if (done.count(mk(i, k)) && done.count(mk(j, k))) { skip = true; break; }
            }
            if (skip) continue;
            Poly r = reduceFull(sPoly(basis[i], basis[j]), basis);
            if (r.empty()) continue;
            basis.push_back(makeMonic(std::move(r)));
            addPairs(static_cast<int>(basis.size()) - 1);
            if (stopEarly && stopEarly(basis)) return basis;
        }
        return basis;
    }

    // inter-reduce to the reduced basis
    std::vector<Poly> reduceBasis(std::vector<Poly> basis) const {
        // drop elements whose lead is divisible by another lead
        std::vector<Poly> kept;
        for (size_t i = 0; i < basis.size(); ++i) {
            bool redundant = false;
            for (size_t j = 0; j < basis.size(); ++j) {
                if (i == j) continue;
                if (basis[j].front().first.divides(basis[i].front().first)) {
                    if (basis[i].front().first == basis[j].front().first && i < j) continue;
                    redundant = true;
                    break;
                }
            }
            if (!redundant) kept.push_back(basis[i]);
        }
        // tail-reduce each against the others
        for (size_t i = 0; i < kept.size(); ++i) {
            std::vector<Poly> others;
            for (size_t j = 0; j < kept.size(); ++j)
                if (j != i) others.push_back(kept[j]);
            kept[i] = makeMonic(reduceFull(kept[i], others));
        }
        std::sort(kept.begin(), kept.end(), [&](const Poly& a, const Poly& b) {
            return ord.greater(a.front().first, b.front().first);
        });
        return kept;
    }
};

// pure-power scan: minimal pure-power degrees per variable among lead terms
template <typename Poly>
std::optional<int> artinianBound(const std::vector<Poly>& basis, int numVars) {
    std::vector<int> best(numVars, -1);
    for (const auto& g : basis) {
        if (g.empty()) continue;
        const Monomial& lt = g.front().first;
        int var = -1;
        for (int i = 0; i < numVars; ++i) {
            if (lt.exps[i] > 0) {
                if (var >= 0) { var = -2; break; }
                var = i;
            }
        }
        if (var == -1) return 1; // unit ideal
        if (var >= 0) {
            int e = lt.exps[var];
            if (best[var] < 0 || e < best[var]) best[var] = e;
        }
    }
    int sum = 1;
    for (int i = 0; i < numVars; ++i) {
        if (best[i] < 0) return std::nullopt;
        sum += best[i] - 1;
    }
    return sum;
}

Polynomial toPolynomial(const Engine<QField>::Poly& p, int numVars) {
    Polynomial out(numVars);
    for (const auto& [m, c] : p) out.addTerm(m, c);
    return out;
}

} // namespace

std::vector<Monomial> GroebnerBasis::leadingTerms() const {
    std::vector<Monomial> lts;
    for (const auto& g : basis) lts.push_back(g.leadingTerm(order).first);
    return lts;
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order) {
    int numVars = 0;
    for (const auto& g : gens) numVars = std::max(numVars, g.numVars());
    Engine<QField> eng{QField{}, order};
    std::vector<Engine<QField>::Poly> basis;
    for (const auto& g : gens)
        if (!g.isZero()) basis.push_back(eng.fromPolynomial(g));
    basis = eng.reduceBasis(eng.run(std::move(basis), nullptr));
    GroebnerBasis gb;
    gb.order = order;
    for (const auto& b : basis) gb.basis.push_back(toPolynomial(b, numVars));
    return gb;
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
    if (p.isZero()) return p;
    Engine<QField> eng{QField{}, gb.order};
    std::vector<Engine<QField>::Poly> basis;
    for (const auto& g : gb.basis) basis.push_back(eng.fromPolynomial(g));
    return toPolynomial(eng.reduceFull(eng.fromPolynomial(p), basis), p.numVars());
}

bool ideal_member(const Polynomial& p, const GroebnerBasis& gb) {
    return normal_form(p, gb).isZero();
}

long groebner_hilbert(const GroebnerBasis& gb, int numVars, int t) {
    std::vector<Monomial> lts = gb.leadingTerms();
    long count = 0;
    for (const auto& m : enumerate_monomials(numVars, t, gb.order)) {
        bool divisible = false;
        for (const auto& lt : lts)
            if (lt.divides(m)) { divisible = true; break; }
        if (!divisible) ++count;
    }
    return count;
}

namespace {

template <typename F>
ArtinianCheck artinianRun(const F& field, const std::vector<Polynomial>& gens) {
    int numVars = 0;
    for (const auto& g : gens) numVars = std::max(numVars, g.numVars());
    Engine<F> eng{field, MonomialOrder{}};
    std::vector<typename Engine<F>::Poly> basis;
    for (const auto& g : gens)
        if (!g.isZero()) basis.push_back(eng.fromPolynomial(g));
    ArtinianCheck out;
    auto stop = [&](const std::vector<typename Engine<F>::Poly>& b) {
        return artinianBound(b, numVars).has_value();
    };
    basis = eng.run(std::move(basis), stop);
    if (auto bound = artinianBound(basis, numVars)) {
        out.artinian = true;
        out.vanishingDegree = *bound;
    }
    return out;
}

} // namespace

ArtinianCheck modp_artinian_check(const std::vector<Polynomial>& gens, unsigned long p) {
    PField f{p};
    for (const auto& g : gens)
        for (const auto& [m, c] : g.terms())
            if (!f.embeds(c)) throw std::domain_error("coefficient has p in denominator");
    return artinianRun(f, gens);
}

ArtinianCheck artinian_check_exact(const std::vector<Polynomial>& gens) {
    return artinianRun(QField{}, gens);
}

} // namespace hodge

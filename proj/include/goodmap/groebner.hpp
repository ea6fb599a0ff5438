#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "goodmap/limits.hpp"
#include "goodmap/polynomial.hpp"

namespace goodmap {

template <class K>
struct DivisionResult {
    std::vector<Polynomial<K>> quotients;
    Polynomial<K> remainder;
};

namespace detail {

template <class K>
void check_poly(const Polynomial<K>& p, const ResourceLimits& lim) {
    if (p.total_degree() > lim.max_degree)
        throw ResourceError("polynomial degree guard exceeded (GOODMAP_MAX_DEGREE)");
    if (static_cast<long>(p.term_count()) > lim.max_terms)
        throw ResourceError("polynomial term-count guard exceeded");
}

}  // namespace detail

// Multivariate division: f = sum quotients[i]*divisors[i] + remainder, where no
// term of the remainder is divisible by any divisor's leading term.
template <class K>
DivisionResult<K> divide(const Polynomial<K>& f, const std::vector<Polynomial<K>>& divisors,
                         const MonomialOrder& ord, const ResourceLimits& lim = default_limits()) {
    for (const auto& d : divisors)
        if (d.nvars() != f.nvars()) throw MisuseError("divide: mixed ring contexts");
    detail::check_poly(f, lim);

    DivisionResult<K> out;
    out.quotients.assign(divisors.size(), Polynomial<K>(f.nvars()));
    out.remainder = Polynomial<K>(f.nvars());
    Polynomial<K> p = f;
    long steps = 0;
    while (!p.is_zero()) {
        if (++steps > lim.max_reductions) throw ResourceError("division step guard exceeded");
        const auto& [lm, lc] = p.leading_term(ord);
        bool divided = false;
        for (std::size_t i = 0; i < divisors.size(); ++i) {
            if (divisors[i].is_zero()) continue;
            const auto& [dm, dc] = divisors[i].leading_term(ord);
            if (dm.divides(lm)) {
                Monomial q = lm / dm;
                K qc = lc / dc;
                out.quotients[i] = out.quotients[i] + Polynomial<K>::from_terms(f.nvars(), {{q, qc}});
                p = p - divisors[i].times_term(q, qc);
                detail::check_poly(p, lim);
                divided = true;
                break;
            }
        }
        if (!divided) {
            out.remainder = out.remainder + Polynomial<K>::from_terms(f.nvars(), {{lm, lc}});
            p = p - Polynomial<K>::from_terms(f.nvars(), {{lm, lc}});
        }
    }
    return out;
}

template <class K>
Polynomial<K> normal_form(const Polynomial<K>& f, const std::vector<Polynomial<K>>& basis,
                          const MonomialOrder& ord, const ResourceLimits& lim = default_limits()) {
    return divide(f, basis, ord, lim).remainder;
}

template <class K>
Polynomial<K> s_polynomial(const Polynomial<K>& f, const Polynomial<K>& g, const MonomialOrder& ord) {
    const auto& [fm, fc] = f.leading_term(ord);
    const auto& [gm, gc] = g.leading_term(ord);
    Monomial l = Monomial::lcm(fm, gm);
    return f.times_term(l / fm, FieldOps<K>::one() / fc) - g.times_term(l / gm, FieldOps<K>::one() / gc);
}

// Buchberger's algorithm with the product and chain pair-elimination criteria,
// followed by minimalization and interreduction. The result is the unique
// reduced (monic) Groebner basis, sorted by decreasing leading monomial; the
// zero ideal yields an empty basis.
template <class K>
std::vector<Polynomial<K>> groebner_basis(const std::vector<Polynomial<K>>& generators,
                                          const MonomialOrder& ord,
                                          const ResourceLimits& lim = default_limits()) {
    std::vector<Polynomial<K>> g;
    for (const auto& p : generators)
        if (!p.is_zero()) g.push_back(p);
    if (g.empty()) return {};
    int nvars = g.front().nvars();
    for (const auto& p : g)
        if (p.nvars() != nvars) throw MisuseError("groebner: mixed ring contexts");

    auto lm = [&](std::size_t i) -> const Monomial& { return g[i].leading_term(ord).first; };

    // Deterministic pair queue keyed by (lcm degree, lcm, indices).
    struct Pair {
        Monomial l;
        std::size_t i, j;
    };
    auto pair_less = [&](const Pair& a, const Pair& b) {
        long da = a.l.total_degree(), db = b.l.total_degree();
        if (da != db) return da < db;
        int c = ord.cmp(a.l, b.l);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::vector<Pair> queue;
    std::set<std::pair<std::size_t, std::size_t>> pending;
    auto push_pair = [&](std::size_t i, std::size_t j) {
        queue.push_back(Pair{Monomial::lcm(lm(i), lm(j)), i, j});
        pending.insert({i, j});
    };
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j) push_pair(i, j);

    while (!queue.empty()) {
        auto it = std::min_element(queue.begin(), queue.end(), pair_less);
        Pair pr = *it;
        queue.erase(it);
        pending.erase({pr.i, pr.j});

        if (Monomial::coprime(lm(pr.i), lm(pr.j))) continue;  // product criterion
        bool chain = false;  // chain criterion
        for (std::size_t k = 0; k < g.size() && !chain; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!lm(k).divides(pr.l)) continue;
            auto key = [](std::size_t a, std::size_t b) {
                return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
            };
            if (!pending.count(key(pr.i, k)) && !pending.count(key(pr.j, k))) chain = true;
        }
        if (chain) continue;

        Polynomial<K> s = s_polynomial(g[pr.i], g[pr.j], ord);
        detail::check_poly(s, lim);
        Polynomial<K> r = normal_form(s, g, ord, lim);
        if (r.is_zero()) continue;
        detail::check_poly(r, lim);
        g.push_back(r);
        if (static_cast<long>(g.size()) > lim.max_basis)
            throw ResourceError("Groebner basis size guard exceeded");
        for (std::size_t i = 0; i + 1 < g.size(); ++i) push_pair(i, g.size() - 1);
    }

    // Minimalize: drop elements whose leading term another element divides
    // (ties broken by index so exactly one of two equal leading terms survives).
    std::vector<Polynomial<K>> minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
            if (i == j) continue;
            if (lm(j).divides(lm(i)) && (!(lm(i) == lm(j)) || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(g[i]);
    }

    // Interreduce and normalize to monic.
    std::vector<Polynomial<K>> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial<K>> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial<K> r = normal_form(minimal[i], others, ord, lim);
        if (!r.is_zero()) reduced.push_back(r.scaled(FieldOps<K>::one() / r.leading_term(ord).second));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial<K>& a, const Polynomial<K>& b) {
        return ord.cmp(a.leading_term(ord).first, b.leading_term(ord).first) > 0;
    });
    return reduced;
}

// True if the basis generates the unit ideal.
template <class K>
bool basis_is_unit(const std::vector<Polynomial<K>>& basis) {
    for (const auto& p : basis)
        if (p.is_nonzero_constant()) return true;
    return false;
}

}  // namespace goodmap

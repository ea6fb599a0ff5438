#include "goodmap/ideal.hpp"

#include <algorithm>

namespace goodmap {

namespace {

// Shift every variable index up by `by` into a ring with `new_nvars` variables.
Poly shift_vars(const Poly& p, int by, int new_nvars) {
    std::vector<int> idx(static_cast<std::size_t>(p.nvars()));
    for (int i = 0; i < p.nvars(); ++i) idx[static_cast<std::size_t>(i)] = i + by;
    return p.map_vars(idx, new_nvars);
}

}  // namespace

Ideal::Ideal(int nvars, std::vector<Poly> generators)
    : nvars_(nvars), cache_(std::make_shared<Cache>()) {
    for (auto& g : generators) {
        if (g.is_zero()) continue;
        if (g.nvars() != nvars) throw MisuseError("ideal: mixed ring contexts");
        gens_.push_back(std::move(g));
    }
}

const std::vector<Poly>& Ideal::basis(const MonomialOrder& ord) const {
    {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        auto it = cache_->bases.find(ord);
        if (it != cache_->bases.end()) return it->second;
    }
    std::vector<Poly> b = groebner_basis(gens_, ord);
    std::lock_guard<std::mutex> lock(cache_->mutex);
    return cache_->bases.emplace(ord, std::move(b)).first->second;
}

bool Ideal::contains(const Poly& f) const {
    if (f.is_zero()) return true;
    if (f.nvars() != nvars_) throw MisuseError("ideal membership: mixed ring contexts");
    return normal_form(f, basis(MonomialOrder::grevlex()), MonomialOrder::grevlex()).is_zero();
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    if (a.nvars() != b.nvars()) throw MisuseError("ideal_sum: mixed ring contexts");
    std::vector<Poly> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return Ideal(a.nvars(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
    if (a.nvars() != b.nvars()) throw MisuseError("ideal_product: mixed ring contexts");
    std::vector<Poly> gens;
    for (const auto& f : a.generators())
        for (const auto& g : b.generators()) gens.push_back(f * g);
    return Ideal(a.nvars(), std::move(gens));
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
    if (a.nvars() != b.nvars()) throw MisuseError("ideal_intersect: mixed ring contexts");
    int n = a.nvars();
    // t·a + (1−t)·b in k[t, x], then eliminate t.
    Poly t = Poly::variable(n + 1, 0);
    Poly one_minus_t = Poly::constant(n + 1, Rational(1)) - t;
    std::vector<Poly> gens;
    for (const auto& f : a.generators()) gens.push_back(t * shift_vars(f, 1, n + 1));
    for (const auto& g : b.generators()) gens.push_back(one_minus_t * shift_vars(g, 1, n + 1));
    auto gb = groebner_basis(gens, MonomialOrder::block(1));
    std::vector<Poly> kept;
    std::vector<int> down(static_cast<std::size_t>(n + 1));
    down[0] = -1;
    for (int i = 0; i < n; ++i) down[static_cast<std::size_t>(i + 1)] = i;
    for (const auto& p : gb)
        if (p.supported_on_tail(1)) kept.push_back(p.map_vars(down, n));
    return Ideal(n, std::move(kept));
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
    if (a.nvars() != b.nvars()) return false;
    return a.basis(MonomialOrder::grevlex()) == b.basis(MonomialOrder::grevlex());
}

Ideal eliminate(const Ideal& ideal, int keep_last) {
    int n = ideal.nvars();
    if (keep_last < 0 || keep_last > n) throw MisuseError("eliminate: keep_last out of range");
    int drop = n - keep_last;
    if (drop == 0) return ideal;
    const auto& gb = ideal.basis(MonomialOrder::block(drop));
    std::vector<int> down(static_cast<std::size_t>(n));
    for (int i = 0; i < drop; ++i) down[static_cast<std::size_t>(i)] = -1;
    for (int i = drop; i < n; ++i) down[static_cast<std::size_t>(i)] = i - drop;
    std::vector<Poly> kept;
    for (const auto& p : gb)
        if (p.supported_on_tail(drop)) kept.push_back(p.map_vars(down, keep_last));
    return Ideal(keep_last, std::move(kept));
}

namespace {

// I : g^∞ via the Rabinowitsch variable: (I + (1 − t·g)) ∩ k[x].
Ideal saturate_single(const Ideal& ideal, const Poly& g) {
    int n = ideal.nvars();
    if (g.is_zero()) return Ideal::unit(n);
    if (g.is_nonzero_constant()) return ideal;
    std::vector<Poly> gens;
    for (const auto& f : ideal.generators()) gens.push_back(shift_vars(f, 1, n + 1));
    Poly t = Poly::variable(n + 1, 0);
    gens.push_back(Poly::constant(n + 1, Rational(1)) - t * shift_vars(g, 1, n + 1));
    Ideal extended(n + 1, std::move(gens));
    return eliminate(extended, n);
}

}  // namespace

Ideal saturate(const Ideal& ideal, const Ideal& j) {
    if (ideal.nvars() != j.nvars()) throw MisuseError("saturate: mixed ring contexts");
    // I : J^∞ = ∩_g I : g^∞ over the generators of J; no generators means
    // J = (0), whose saturation is the unit ideal.
    Ideal result = Ideal::unit(ideal.nvars());
    bool first = true;
    for (const auto& g : j.generators()) {
        Ideal part = saturate_single(ideal, g);
        result = first ? part : ideal_intersect(result, part);
        first = false;
    }
    return result;
}

bool radical_member(const Poly& f, const Ideal& ideal) {
    if (f.nvars() != ideal.nvars()) throw MisuseError("radical_member: mixed ring contexts");
    if (f.is_zero()) return true;
    int n = ideal.nvars();
    std::vector<int> same(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) same[static_cast<std::size_t>(i)] = i;
    std::vector<Poly> gens;
    for (const auto& p : ideal.generators()) gens.push_back(p.map_vars(same, n + 1));
    Poly t = Poly::variable(n + 1, n);
    gens.push_back(Poly::constant(n + 1, Rational(1)) - t * f.map_vars(same, n + 1));
    return basis_is_unit(groebner_basis(gens, MonomialOrder::grevlex()));
}

bool variety_contained(const Ideal& a, const Ideal& b) {
    for (const auto& g : b.generators())
        if (!radical_member(g, a)) return false;
    return true;
}

}  // namespace goodmap

#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "goodmap/groebner.hpp"
#include "goodmap/polynomial.hpp"

namespace goodmap {

// Polynomial ideal over the rationals with a write-once memo of reduced
// Groebner bases per monomial order. Copies share the memo; an Ideal is
// immutable after construction.
class Ideal {
public:
    Ideal() : nvars_(0), cache_(std::make_shared<Cache>()) {}
    Ideal(int nvars, std::vector<Poly> generators);

    static Ideal zero(int nvars) { return Ideal(nvars, {}); }
    static Ideal unit(int nvars) { return Ideal(nvars, {Poly::constant(nvars, Rational(1))}); }

    int nvars() const { return nvars_; }
    const std::vector<Poly>& generators() const { return gens_; }

    // Unique reduced Groebner basis for the order (cached).
    const std::vector<Poly>& basis(const MonomialOrder& ord) const;

    bool contains(const Poly& f) const;
    bool is_unit() const { return basis_is_unit(basis(MonomialOrder::grevlex())); }
    bool is_zero_ideal() const { return basis(MonomialOrder::grevlex()).empty(); }

private:
    struct Cache {
        std::mutex mutex;
        std::map<MonomialOrder, std::vector<Poly>> bases;
    };

    int nvars_;
    std::vector<Poly> gens_;
    std::shared_ptr<Cache> cache_;
};

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_intersect(const Ideal& a, const Ideal& b);

// Two ideals are equal iff their reduced Groebner bases coincide.
bool ideal_equal(const Ideal& a, const Ideal& b);

// I ∩ k[last keep_last variables], returned in the smaller ring context.
Ideal eliminate(const Ideal& ideal, int keep_last);

// I : J^∞, the ideal of the Zariski closure of V(I) ∖ V(J).
Ideal saturate(const Ideal& ideal, const Ideal& j);

// True iff f ∈ √I, i.e. V(I) ⊆ V(f) over the algebraic closure.
bool radical_member(const Poly& f, const Ideal& ideal);

// True iff V(a) ⊆ V(b), i.e. every generator of b lies in √a.
bool variety_contained(const Ideal& a, const Ideal& b);

}  // namespace goodmap

#pragma once

#include <vector>

#include "goodmap/ideal.hpp"

namespace goodmap {

// The locally closed set V(present) ∖ V(absent) in affine space over the
// algebraic closure (coordinates computed over ℚ).
struct Stratum {
    Ideal present;
    Ideal absent;

    Stratum(Ideal present_ideal, Ideal absent_ideal)
        : present(std::move(present_ideal)), absent(std::move(absent_ideal)) {
        if (present.nvars() != absent.nvars())
            throw MisuseError("stratum: mixed ring contexts");
    }

    int nvars() const { return present.nvars(); }
    bool is_empty() const;
    bool contains(const std::vector<Rational>& point) const;
};

// A finite union of strata; the empty union denotes ∅.
class AffineConstructible {
public:
    explicit AffineConstructible(int nvars) : nvars_(nvars) {}
    AffineConstructible(int nvars, std::vector<Stratum> strata);

    static AffineConstructible empty_set(int nvars) { return AffineConstructible(nvars); }
    static AffineConstructible whole_space(int nvars) {
        return AffineConstructible(nvars, {Stratum(Ideal::zero(nvars), Ideal::unit(nvars))});
    }
    static AffineConstructible closed_set(Ideal i) {
        int n = i.nvars();
        return AffineConstructible(n, {Stratum(std::move(i), Ideal::unit(n))});
    }

    int nvars() const { return nvars_; }
    const std::vector<Stratum>& strata() const { return strata_; }
    void add(Stratum s);

    // Copy with empty strata removed.
    AffineConstructible pruned() const;

private:
    int nvars_;
    std::vector<Stratum> strata_;
};

bool is_empty(const AffineConstructible& s);

AffineConstructible set_union(const AffineConstructible& a, const AffineConstructible& b);
AffineConstructible set_intersect(const AffineConstructible& a, const AffineConstructible& b);
AffineConstructible set_complement(const AffineConstructible& a);
AffineConstructible set_difference(const AffineConstructible& a, const AffineConstructible& b);

// Membership-equality over the algebraic closure: both differences empty.
bool membership_equal(const AffineConstructible& a, const AffineConstructible& b);

// Ideal of the Zariski closure: the intersection over strata of
// saturate(present, absent). The empty set closes to V(1).
Ideal closure_ideal(const AffineConstructible& s);

// Exact membership of a rational point.
bool contains_point(const AffineConstructible& s, const std::vector<Rational>& point);

// A polynomial map A^n -> A^m given by m components in the source variables.
class PolyMap {
public:
    PolyMap(int source_vars, int target_vars, std::vector<Poly> components);

    static PolyMap identity(int nvars);
    // Keep the first target_vars coordinates.
    static PolyMap projection(int source_vars, int target_vars);

    int source_vars() const { return source_vars_; }
    int target_vars() const { return target_vars_; }
    const std::vector<Poly>& components() const { return components_; }

    std::vector<Rational> apply(const std::vector<Rational>& point) const;

private:
    int source_vars_;
    int target_vars_;
    std::vector<Poly> components_;
};

PolyMap compose(const PolyMap& second, const PolyMap& first);

}  // namespace goodmap

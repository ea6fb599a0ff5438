#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "goodmap/errors.hpp"

namespace goodmap {

// Subsets of a finite space are bitmasks over its points.
using Mask = std::uint32_t;

inline int popcount(Mask m) { return std::popcount(m); }
inline Mask bit(int i) { return Mask{1} << i; }

// Hard representation limit; exhaustive enumeration is additionally capped.
constexpr int kMaxPoints = 20;
// Default cap for exhaustive checkers; enumeration beyond it must be forced
// by passing an explicit larger cap.
constexpr int kDefaultSizeCap = 16;

// A finite topological space encoded by its specialization preorder:
// x ≤ y means x lies in the closure of {y}. Closed sets are exactly the
// down-sets of ≤ and open sets exactly the up-sets. The preorder need not
// be antisymmetric: non-T0 spaces are deliberately admitted.
class FiniteSpace {
public:
    // Space whose preorder is the reflexive-transitive closure of the given
    // pairs (x, y), each read as "x is a specialization of y".
    static FiniteSpace from_pairs(int n_points, const std::vector<std::pair<int, int>>& pairs);

    int size() const { return n_; }
    Mask full() const { return n_ == 0 ? 0 : (Mask{1} << n_) - 1; }
    bool leq(int x, int y) const { return (below_[y] & bit(x)) != 0; }

    // cl{y} and the minimal open neighbourhood of x.
    Mask point_closure(int y) const { return below_[y]; }
    Mask point_star(int x) const { return above_[x]; }

    Mask closure(Mask s) const;
    Mask up_closure(Mask s) const;  // smallest open superset
    Mask interior(Mask s) const;
    bool is_closed(Mask s) const { return closure(s) == s; }
    bool is_open(Mask s) const { return up_closure(s) == s; }

    // s = O ∩ C for some open O, closed C; equivalently s is open in its
    // closure.
    bool is_locally_closed(Mask s) const;
    bool is_irreducible(Mask s) const;

    // Points x ∈ s with cl{x} = s. Requires s irreducible and closed.
    Mask generic_points(Mask s) const;

    // Every irreducible closed subset has exactly one generic point. For
    // finite spaces this is equivalent to T0 (antisymmetry of ≤).
    bool is_sober() const;
    bool is_t0() const { return is_sober(); }

    Mask closed_points() const;

    // The distinct irreducible closed subsets, i.e. the point closures,
    // deduplicated, ascending by mask.
    std::vector<Mask> irreducible_closed_sets() const;

    // All nonempty subsets that are both irreducible and locally closed,
    // each exactly once, ascending by mask. Agrees with filtering the power
    // set through is_irreducible and is_locally_closed.
    std::vector<Mask> irreducible_locally_closed(int size_cap = kDefaultSizeCap) const;

    // All open subsets, ascending by mask (the empty set included).
    std::vector<Mask> open_sets(int size_cap = kDefaultSizeCap) const;

    // Relative interior of a ⊆ f within the subspace f.
    Mask relative_interior(Mask a, Mask f) const;
    // Relative closure of a within the subspace f.
    Mask relative_closure(Mask a, Mask f) const { return closure(a) & f; }

    bool operator==(const FiniteSpace& o) const { return n_ == o.n_ && below_ == o.below_; }

    // Serialized pair list (a minimal generating description is not attempted;
    // all non-reflexive relations are listed).
    std::vector<std::pair<int, int>> relation_pairs() const;

private:
    FiniteSpace(int n, std::vector<Mask> below, std::vector<Mask> above)
        : n_(n), below_(std::move(below)), above_(std::move(above)) {}

    void check_cap(int size_cap) const;

    int n_ = 0;
    std::vector<Mask> below_;  // below_[y] = {x : x ≤ y} = cl{y}
    std::vector<Mask> above_;  // above_[x] = {y : x ≤ y}
};

// Spec-level operation name for FiniteSpace::from_pairs.
FiniteSpace make_space(int n_points, const std::vector<std::pair<int, int>>& pairs);

// A subset tied to its ambient space.
struct PointSet {
    const FiniteSpace* space = nullptr;
    Mask bits = 0;

    bool operator==(const PointSet& o) const { return space == o.space && bits == o.bits; }
};

inline PointSet point_set(const FiniteSpace& space, Mask bits) {
    if ((bits & ~space.full()) != 0) throw MisuseError("point set: members outside the space");
    return PointSet{&space, bits};
}

inline PointSet closure(const PointSet& s) { return PointSet{s.space, s.space->closure(s.bits)}; }
inline PointSet interior(const PointSet& s) { return PointSet{s.space, s.space->interior(s.bits)}; }
inline bool is_locally_closed(const PointSet& s) { return s.space->is_locally_closed(s.bits); }
inline bool is_irreducible(const PointSet& s) { return s.space->is_irreducible(s.bits); }
inline PointSet generic_points(const PointSet& s) {
    return PointSet{s.space, s.space->generic_points(s.bits)};
}

// A continuous map between finite spaces. For finite spaces continuity is
// equivalent to monotonicity for the specialization preorders (standard order
// theory); the constructor enforces it.
class SpaceMap {
public:
    SpaceMap(std::shared_ptr<const FiniteSpace> source, std::shared_ptr<const FiniteSpace> target,
             std::vector<int> assignment);

    const FiniteSpace& source() const { return *src_; }
    const FiniteSpace& target() const { return *dst_; }
    std::shared_ptr<const FiniteSpace> source_ptr() const { return src_; }
    std::shared_ptr<const FiniteSpace> target_ptr() const { return dst_; }
    const std::vector<int>& assignment() const { return assign_; }

    int apply(int x) const { return assign_[static_cast<std::size_t>(x)]; }
    Mask image(Mask s) const;
    Mask image() const { return image(src_->full()); }
    Mask preimage(Mask s) const;

private:
    std::shared_ptr<const FiniteSpace> src_;
    std::shared_ptr<const FiniteSpace> dst_;
    std::vector<int> assign_;
};

SpaceMap compose(const SpaceMap& second, const SpaceMap& first);

// The subspace induced on the points of `subset` (re-indexed in increasing
// order) together with the map new-index -> old-index.
std::pair<FiniteSpace, std::vector<int>> subspace(const FiniteSpace& space, Mask subset);

// f restricted to a subset of its source, as a map into the full target.
SpaceMap restrict_map(const SpaceMap& f, Mask source_subset);

// f with target cut down to a subspace containing the image.
SpaceMap corestrict_map(const SpaceMap& f, Mask target_subset);

// The induced map f^{-1}(target_subset) -> target_subset.
SpaceMap induced_over(const SpaceMap& f, Mask target_subset);

}  // namespace goodmap

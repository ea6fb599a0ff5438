#pragma once

#include <optional>
#include <vector>

#include "goodmap/finite_space.hpp"

namespace goodmap {

// Per-U outcome of the goodness search: either a witnessing open W of the
// target with W ∩ f(U) = W ∩ cl(f(U)) ≠ ∅, or the failure marker.
struct GoodnessEntry {
    Mask u = 0;
    bool ok = false;
    Mask witness = 0;  // meaningful iff ok
};

class GoodnessVerdict {
public:
    // Validates every recorded witness against the defining equation.
    GoodnessVerdict(const SpaceMap& f, std::vector<GoodnessEntry> table);

    bool good() const { return good_; }
    const std::vector<GoodnessEntry>& table() const { return table_; }
    std::optional<Mask> first_failure() const;

private:
    bool good_;
    std::vector<GoodnessEntry> table_;
};

struct WeakGoodnessEntry {
    Mask u = 0;
    bool ok = false;
    Mask v = 0;  // nonempty locally closed subset of the target inside f(U)
};

class WeakGoodnessVerdict {
public:
    WeakGoodnessVerdict(const SpaceMap& f, std::vector<WeakGoodnessEntry> table);

    bool weak_good() const { return weak_good_; }
    const std::vector<WeakGoodnessEntry>& table() const { return table_; }
    std::optional<Mask> first_failure() const;

private:
    bool weak_good_;
    std::vector<WeakGoodnessEntry> table_;
};

// Goodness straight from the definition: for every nonempty irreducible
// locally closed U in the source, search the nonempty opens W of the target
// (by decreasing size, so the recorded witness is the maximal one) for
// W ∩ f(U) = W ∩ cl(f(U)) ≠ ∅.
GoodnessVerdict is_good_definition(const SpaceMap& f, int size_cap = kDefaultSizeCap);

// The equivalent characterization: for every nonempty irreducible closed
// Z ⊆ X and nonempty relatively open U ⊆ Z, f(U) contains a nonempty
// relatively open subset of cl(f(Z)).
bool is_good_characterization(const SpaceMap& f, int size_cap = kDefaultSizeCap);

// Weak goodness: every nonempty locally closed U ⊆ X admits a nonempty
// locally closed V ⊆ Y with V ⊆ f(U).
WeakGoodnessVerdict is_weak_good(const SpaceMap& f, int size_cap = kDefaultSizeCap);

// Every nonempty locally closed subset contains a point closed in the space.
bool is_jacobson(const FiniteSpace& x, int size_cap = kDefaultSizeCap);

// Opens of the target in witness-search order: decreasing size, ties by
// ascending mask; the empty set excluded.
std::vector<Mask> witness_search_opens(const FiniteSpace& space, int size_cap = kDefaultSizeCap);

}  // namespace goodmap

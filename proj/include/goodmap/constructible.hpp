#pragma once

#include <optional>
#include <vector>

#include "goodmap/finite_space.hpp"

namespace goodmap {

// A witness that a set is constructible: finitely many locally closed pieces
// whose union is the represented set. Pieces are not canonical; compare sets,
// never piece lists.
class LocallyClosedDecomposition {
public:
    LocallyClosedDecomposition(const FiniteSpace& space, Mask represented,
                               std::vector<Mask> pieces);

    const std::vector<Mask>& pieces() const { return pieces_; }
    Mask represented() const { return represented_; }

private:
    Mask represented_;
    std::vector<Mask> pieces_;
};

// Decides constructibility straight from the definition: peels relatively open
// pieces of the remaining set inside its closure, falling back to an exact
// search over locally closed subsets when the peel stalls. Present iff E is a
// finite union of locally closed subsets.
std::optional<LocallyClosedDecomposition> is_constructible_bruteforce(
    const FiniteSpace& space, Mask e, int size_cap = kDefaultSizeCap);

// The constructibility criterion: E is constructible iff for every irreducible
// closed F with E ∩ F dense in F, E ∩ F contains a nonempty relatively open
// subset of F. Finite spaces are Noetherian, so the criterion applies.
bool is_constructible_criterion(const FiniteSpace& space, Mask e);

// True iff f(E) is constructible for every constructible E in the source,
// both sides decided by the criterion.
bool image_preserves_constructible(const SpaceMap& f, int size_cap = kDefaultSizeCap);

}  // namespace goodmap

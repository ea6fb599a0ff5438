#include "goodmap/constructible.hpp"

#include <algorithm>

namespace goodmap {

LocallyClosedDecomposition::LocallyClosedDecomposition(const FiniteSpace& space, Mask represented,
                                                       std::vector<Mask> pieces)
    : represented_(represented), pieces_(std::move(pieces)) {
    Mask acc = 0;
    for (Mask p : pieces_) {
        if (!space.is_locally_closed(p))
            throw MisuseError("decomposition piece is not locally closed");
        acc |= p;
    }
    if (acc != represented_) throw MisuseError("decomposition does not cover the set");
}

std::optional<LocallyClosedDecomposition> is_constructible_bruteforce(const FiniteSpace& space,
                                                                      Mask e, int size_cap) {
    if (space.size() > size_cap)
        throw ResourceError("is_constructible_bruteforce: space exceeds the size cap");
    std::vector<Mask> pieces;
    Mask rest = e;
    while (rest != 0) {
        // Greedy peel: the relatively open part of the remainder inside its
        // closure is locally closed.
        Mask piece = space.relative_interior(rest, space.closure(rest));
        if (piece != 0) {
            pieces.push_back(piece);
            rest &= ~piece;
            continue;
        }
        // Stalled: exact search. The remainder is a union of locally closed
        // sets iff every point sits in some locally closed subset of it.
        std::vector<Mask> found;
        Mask covered = 0;
        Mask sub = rest;
        while (true) {
            if (sub != 0 && space.is_locally_closed(sub)) found.push_back(sub);
            if (sub == 0) break;
            sub = (sub - 1) & rest;
        }
        for (Mask m : found) covered |= m;
        if (covered != rest) return std::nullopt;
        std::sort(found.begin(), found.end(), [](Mask a, Mask b) {
            if (popcount(a) != popcount(b)) return popcount(a) > popcount(b);
            return a < b;
        });
        Mask got = 0;
        for (Mask m : found) {
            if ((m & ~got) == 0) continue;
            pieces.push_back(m);
            got |= m;
            if (got == rest) break;
        }
        rest = 0;
    }
    return LocallyClosedDecomposition(space, e, std::move(pieces));
}

bool is_constructible_criterion(const FiniteSpace& space, Mask e) {
    for (Mask f : space.irreducible_closed_sets()) {
        Mask a = e & f;
        if (space.closure(a) != f) continue;  // E ∩ F not dense in F
        if (space.relative_interior(a, f) == 0) return false;
    }
    return true;
}

bool image_preserves_constructible(const SpaceMap& f, int size_cap) {
    if (f.source().size() > size_cap || f.target().size() > size_cap)
        throw ResourceError("image_preserves_constructible: space exceeds the size cap");
    Mask full = f.source().full();
    for (Mask e = 0;; ++e) {
        if (is_constructible_criterion(f.source(), e) &&
            !is_constructible_criterion(f.target(), f.image(e)))
            return false;
        if (e == full) break;
    }
    return true;
}

}  // namespace goodmap

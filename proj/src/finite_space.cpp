#include "goodmap/finite_space.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace goodmap {

FiniteSpace FiniteSpace::from_pairs(int n_points, const std::vector<std::pair<int, int>>& pairs) {
    if (n_points < 0 || n_points > kMaxPoints)
        throw MisuseError("space size out of range (0.." + std::to_string(kMaxPoints) + ")");
    std::vector<Mask> below(static_cast<std::size_t>(n_points), 0);
    for (int y = 0; y < n_points; ++y) below[y] = bit(y);
    for (auto [x, y] : pairs) {
        if (x < 0 || x >= n_points || y < 0 || y >= n_points)
            throw MisuseError("specialization pair index out of range");
        below[y] |= bit(x);
    }
    // Transitive closure: z ≤ x ≤ y forces z ≤ y.
    bool changed = true;
    while (changed) {
        changed = false;
        for (int y = 0; y < n_points; ++y) {
            Mask acc = below[y];
            for (int x = 0; x < n_points; ++x)
                if (acc & bit(x)) acc |= below[x];
            if (acc != below[y]) {
                below[y] = acc;
                changed = true;
            }
        }
    }
    std::vector<Mask> above(static_cast<std::size_t>(n_points), 0);
    for (int x = 0; x < n_points; ++x)
        for (int y = 0; y < n_points; ++y)
            if (below[y] & bit(x)) above[x] |= bit(y);
    return FiniteSpace(n_points, std::move(below), std::move(above));
}

FiniteSpace make_space(int n_points, const std::vector<std::pair<int, int>>& pairs) {
    return FiniteSpace::from_pairs(n_points, pairs);
}

Mask FiniteSpace::closure(Mask s) const {
    Mask acc = 0;
    for (int y = 0; y < n_; ++y)
        if (s & bit(y)) acc |= below_[y];
    return acc;
}

Mask FiniteSpace::up_closure(Mask s) const {
    Mask acc = 0;
    for (int x = 0; x < n_; ++x)
        if (s & bit(x)) acc |= above_[x];
    return acc;
}

Mask FiniteSpace::interior(Mask s) const { return full() & ~closure(full() & ~s); }

bool FiniteSpace::is_locally_closed(Mask s) const {
    // The smallest open and smallest closed supersets intersect to s exactly
    // when s is an open piece of its closure.
    return (up_closure(s) & closure(s)) == s;
}

bool FiniteSpace::is_irreducible(Mask s) const {
    if (s == 0) return false;
    for (int x = 0; x < n_; ++x)
        if ((s & bit(x)) && (s & ~below_[x]) == 0) return true;
    return false;
}

Mask FiniteSpace::generic_points(Mask s) const {
    if (!is_irreducible(s) || !is_closed(s))
        throw MisuseError("generic_points: set is not irreducible closed");
    Mask g = 0;
    for (int x = 0; x < n_; ++x)
        if ((s & bit(x)) && below_[x] == s) g |= bit(x);
    return g;
}

bool FiniteSpace::is_sober() const {
    for (Mask c : irreducible_closed_sets())
        if (popcount(generic_points(c)) != 1) return false;
    return true;
}

Mask FiniteSpace::closed_points() const {
    Mask m = 0;
    for (int x = 0; x < n_; ++x)
        if (below_[x] == bit(x)) m |= bit(x);
    return m;
}

std::vector<Mask> FiniteSpace::irreducible_closed_sets() const {
    std::set<Mask> seen(below_.begin(), below_.end());
    return std::vector<Mask>(seen.begin(), seen.end());
}

std::vector<Mask> FiniteSpace::irreducible_locally_closed(int size_cap) const {
    check_cap(size_cap);
    // Every irreducible locally closed set is a relatively open subset of the
    // closure of one of its generic points, and conversely.
    std::set<Mask> out;
    for (int x = 0; x < n_; ++x) {
        Mask c = below_[x];
        Mask rest = c & ~bit(x);
        Mask sub = rest;
        while (true) {
            Mask u = sub | bit(x);
            if (relative_interior(u, c) == u) out.insert(u);
            if (sub == 0) break;
            sub = (sub - 1) & rest;
        }
    }
    return std::vector<Mask>(out.begin(), out.end());
}

std::vector<Mask> FiniteSpace::open_sets(int size_cap) const {
    check_cap(size_cap);
    std::vector<Mask> out;
    for (Mask m = 0;; ++m) {
        if (is_open(m)) out.push_back(m);
        if (m == full()) break;
    }
    return out;
}

Mask FiniteSpace::relative_interior(Mask a, Mask f) const {
    Mask r = 0;
    for (int x = 0; x < n_; ++x)
        if ((a & bit(x)) && (above_[x] & f & ~a) == 0) r |= bit(x);
    return r;
}

std::vector<std::pair<int, int>> FiniteSpace::relation_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int y = 0; y < n_; ++y)
        for (int x = 0; x < n_; ++x)
            if (x != y && leq(x, y)) out.emplace_back(x, y);
    return out;
}

void FiniteSpace::check_cap(int size_cap) const {
    if (n_ > size_cap)
        throw ResourceError("space exceeds the enumeration size cap (" +
                            std::to_string(size_cap) + " points); pass a larger cap to force");
}

SpaceMap::SpaceMap(std::shared_ptr<const FiniteSpace> source,
                   std::shared_ptr<const FiniteSpace> target, std::vector<int> assignment)
    : src_(std::move(source)), dst_(std::move(target)), assign_(std::move(assignment)) {
    if (static_cast<int>(assign_.size()) != src_->size())
        throw MisuseError("space map: assignment size mismatch");
    for (int v : assign_)
        if (v < 0 || v >= dst_->size()) throw MisuseError("space map: point out of range");
    for (int x = 0; x < src_->size(); ++x)
        for (int y = 0; y < src_->size(); ++y)
            if (src_->leq(x, y) && !dst_->leq(assign_[x], assign_[y]))
                throw MisuseError("space map: assignment is not continuous (monotone)");
}

Mask SpaceMap::image(Mask s) const {
    Mask out = 0;
    for (int x = 0; x < src_->size(); ++x)
        if (s & bit(x)) out |= bit(assign_[static_cast<std::size_t>(x)]);
    return out;
}

Mask SpaceMap::preimage(Mask s) const {
    Mask out = 0;
    for (int x = 0; x < src_->size(); ++x)
        if (s & bit(assign_[static_cast<std::size_t>(x)])) out |= bit(x);
    return out;
}

SpaceMap compose(const SpaceMap& second, const SpaceMap& first) {
    if (&first.target() != &second.source() && !(first.target() == second.source()))
        throw MisuseError("compose: middle spaces differ");
    std::vector<int> assign(static_cast<std::size_t>(first.source().size()));
    for (int x = 0; x < first.source().size(); ++x) assign[x] = second.apply(first.apply(x));
    return SpaceMap(first.source_ptr(), second.target_ptr(), std::move(assign));
}

std::pair<FiniteSpace, std::vector<int>> subspace(const FiniteSpace& space, Mask subset) {
    std::vector<int> points;
    for (int x = 0; x < space.size(); ++x)
        if (subset & bit(x)) points.push_back(x);
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t a = 0; a < points.size(); ++a)
        for (std::size_t b = 0; b < points.size(); ++b)
            if (space.leq(points[a], points[b])) pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
    return {FiniteSpace::from_pairs(static_cast<int>(points.size()), pairs), points};
}

SpaceMap restrict_map(const SpaceMap& f, Mask source_subset) {
    auto [sub, points] = subspace(f.source(), source_subset);
    std::vector<int> assign;
    assign.reserve(points.size());
    for (int old : points) assign.push_back(f.apply(old));
    return SpaceMap(std::make_shared<FiniteSpace>(sub), f.target_ptr(), std::move(assign));
}

SpaceMap corestrict_map(const SpaceMap& f, Mask target_subset) {
    if ((f.image() & ~target_subset) != 0)
        throw MisuseError("corestrict_map: subset misses part of the image");
    auto [sub, points] = subspace(f.target(), target_subset);
    std::vector<int> new_index(static_cast<std::size_t>(f.target().size()), -1);
    for (std::size_t i = 0; i < points.size(); ++i) new_index[points[i]] = static_cast<int>(i);
    std::vector<int> assign;
    assign.reserve(static_cast<std::size_t>(f.source().size()));
    for (int x = 0; x < f.source().size(); ++x) assign.push_back(new_index[f.apply(x)]);
    return SpaceMap(f.source_ptr(), std::make_shared<FiniteSpace>(sub), std::move(assign));
}

SpaceMap induced_over(const SpaceMap& f, Mask target_subset) {
    Mask pre = f.preimage(target_subset);
    auto [sub_src, src_points] = subspace(f.source(), pre);
    auto [sub_dst, dst_points] = subspace(f.target(), target_subset);
    std::vector<int> new_index(static_cast<std::size_t>(f.target().size()), -1);
    for (std::size_t i = 0; i < dst_points.size(); ++i) new_index[dst_points[i]] = static_cast<int>(i);
    std::vector<int> assign;
    assign.reserve(src_points.size());
    for (int old : src_points) assign.push_back(new_index[f.apply(old)]);
    return SpaceMap(std::make_shared<FiniteSpace>(sub_src), std::make_shared<FiniteSpace>(sub_dst),
                    std::move(assign));
}

}  // namespace goodmap

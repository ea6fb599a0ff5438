#include "goodmap/enumeration.hpp"

namespace goodmap {

namespace {

// Off-diagonal relation slots in row-major order: slot k encodes (x, y),
// x != y, meaning x ≤ y.
std::vector<std::pair<int, int>> relation_slots(int n) {
    std::vector<std::pair<int, int>> slots;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y) slots.emplace_back(x, y);
    return slots;
}

bool is_transitive(int n, const std::vector<Mask>& below) {
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x)
            if ((below[y] & bit(x)) && (below[x] & ~below[y])) return false;
    return true;
}

}  // namespace

std::vector<FiniteSpace> all_preorders(int n) {
    if (n == 0) return {FiniteSpace::from_pairs(0, {})};
    if (n > 5) throw ResourceError("all_preorders: enumeration limited to 5 points");
    auto slots = relation_slots(n);
    std::vector<FiniteSpace> out;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << slots.size()); ++code) {
        std::vector<Mask> below(static_cast<std::size_t>(n));
        for (int y = 0; y < n; ++y) below[y] = bit(y);
        for (std::size_t k = 0; k < slots.size(); ++k)
            if (code & (std::uint64_t{1} << k)) below[slots[k].second] |= bit(slots[k].first);
        if (!is_transitive(n, below)) continue;
        std::vector<std::pair<int, int>> pairs;
        for (std::size_t k = 0; k < slots.size(); ++k)
            if (code & (std::uint64_t{1} << k)) pairs.push_back(slots[k]);
        out.push_back(FiniteSpace::from_pairs(n, pairs));
    }
    return out;
}

std::vector<FiniteSpace> all_posets(int n) {
    std::vector<FiniteSpace> out;
    for (auto& s : all_preorders(n))
        if (s.is_t0()) out.push_back(s);
    return out;
}

bool is_monotone_assignment(const FiniteSpace& x, const FiniteSpace& y,
                            const std::vector<int>& assignment) {
    for (int a = 0; a < x.size(); ++a)
        for (int b = 0; b < x.size(); ++b)
            if (x.leq(a, b) && !y.leq(assignment[a], assignment[b])) return false;
    return true;
}

std::vector<std::vector<int>> all_monotone_assignments(const FiniteSpace& x,
                                                       const FiniteSpace& y) {
    int n = x.size(), m = y.size();
    std::vector<std::vector<int>> out;
    if (m == 0) {
        if (n == 0) out.push_back({});
        return out;
    }
    std::vector<int> assign(static_cast<std::size_t>(n), 0);
    while (true) {
        if (is_monotone_assignment(x, y, assign)) out.push_back(assign);
        int i = n - 1;
        while (i >= 0 && assign[i] == m - 1) assign[i--] = 0;
        if (i < 0) break;
        ++assign[i];
    }
    return out;
}

std::vector<std::vector<Mask>> all_open_covers(const FiniteSpace& space) {
    std::vector<Mask> opens;
    for (Mask o : space.open_sets())
        if (o != 0) opens.push_back(o);
    if (opens.size() > 20) throw ResourceError("all_open_covers: too many opens to enumerate");
    std::vector<std::vector<Mask>> covers;
    for (std::uint32_t pick = 1; pick < (1u << opens.size()); ++pick) {
        Mask covered = 0;
        std::vector<Mask> family;
        for (std::size_t k = 0; k < opens.size(); ++k) {
            if (pick & (1u << k)) {
                family.push_back(opens[k]);
                covered |= opens[k];
            }
        }
        if (covered == space.full()) covers.push_back(std::move(family));
    }
    if (space.size() == 0) covers.push_back({});  // the empty cover covers the empty space
    return covers;
}

std::uint64_t next_below(std::mt19937_64& rng, std::uint64_t bound) {
    return bound == 0 ? 0 : rng() % bound;
}

FiniteSpace random_preorder(std::mt19937_64& rng, int n) {
    std::vector<std::pair<int, int>> pairs;
    std::uint64_t count = next_below(rng, static_cast<std::uint64_t>(n * n) + 1);
    for (std::uint64_t i = 0; i < count; ++i) {
        int x = static_cast<int>(next_below(rng, static_cast<std::uint64_t>(n)));
        int y = static_cast<int>(next_below(rng, static_cast<std::uint64_t>(n)));
        pairs.emplace_back(x, y);
    }
    return FiniteSpace::from_pairs(n, pairs);
}

std::vector<int> random_monotone_assignment(std::mt19937_64& rng, const FiniteSpace& x,
                                            const FiniteSpace& y) {
    auto all = all_monotone_assignments(x, y);
    if (all.empty()) throw MisuseError("no monotone assignment exists (empty target)");
    return all[static_cast<std::size_t>(next_below(rng, all.size()))];
}

}  // namespace goodmap

#include "goodmap/goodness.hpp"

#include <algorithm>

namespace goodmap {

namespace {

bool witness_equation_holds(const FiniteSpace& target, Mask w, Mask fu) {
    Mask clfu = target.closure(fu);
    return (w & fu) == (w & clfu) && (w & fu) != 0;
}

}  // namespace

GoodnessVerdict::GoodnessVerdict(const SpaceMap& f, std::vector<GoodnessEntry> table)
    : table_(std::move(table)) {
    good_ = true;
    for (const auto& entry : table_) {
        if (!entry.ok) {
            good_ = false;
            continue;
        }
        if (!witness_equation_holds(f.target(), entry.witness, f.image(entry.u)))
            throw MisuseError("goodness verdict: recorded witness fails the defining equation");
    }
}

std::optional<Mask> GoodnessVerdict::first_failure() const {
    for (const auto& e : table_)
        if (!e.ok) return e.u;
    return std::nullopt;
}

WeakGoodnessVerdict::WeakGoodnessVerdict(const SpaceMap& f, std::vector<WeakGoodnessEntry> table)
    : table_(std::move(table)) {
    weak_good_ = true;
    for (const auto& entry : table_) {
        if (!entry.ok) {
            weak_good_ = false;
            continue;
        }
        bool valid = entry.v != 0 && f.target().is_locally_closed(entry.v) &&
                     (entry.v & ~f.image(entry.u)) == 0;
        if (!valid)
            throw MisuseError("weak goodness verdict: recorded subset fails its invariant");
    }
}

std::optional<Mask> WeakGoodnessVerdict::first_failure() const {
    for (const auto& e : table_)
        if (!e.ok) return e.u;
    return std::nullopt;
}

std::vector<Mask> witness_search_opens(const FiniteSpace& space, int size_cap) {
    std::vector<Mask> opens = space.open_sets(size_cap);
    opens.erase(std::remove(opens.begin(), opens.end(), Mask{0}), opens.end());
    std::sort(opens.begin(), opens.end(), [](Mask a, Mask b) {
        if (popcount(a) != popcount(b)) return popcount(a) > popcount(b);
        return a < b;
    });
    return opens;
}

GoodnessVerdict is_good_definition(const SpaceMap& f, int size_cap) {
    const FiniteSpace& x = f.source();
    const FiniteSpace& y = f.target();
    std::vector<Mask> opens = witness_search_opens(y, size_cap);
    std::vector<GoodnessEntry> table;
    for (Mask u : x.irreducible_locally_closed(size_cap)) {
        GoodnessEntry entry;
        entry.u = u;
        Mask fu = f.image(u);
        for (Mask w : opens) {
            if (witness_equation_holds(y, w, fu)) {
                entry.ok = true;
                entry.witness = w;
                break;
            }
        }
        table.push_back(entry);
    }
    return GoodnessVerdict(f, std::move(table));
}

bool is_good_characterization(const SpaceMap& f, int size_cap) {
    const FiniteSpace& x = f.source();
    const FiniteSpace& y = f.target();
    if (x.size() > size_cap || y.size() > size_cap)
        throw ResourceError("is_good_characterization: space exceeds the size cap");
    for (Mask z : x.irreducible_closed_sets()) {
        Mask c = y.closure(f.image(z));
        // Nonempty relatively open subsets U of Z.
        Mask sub = z;
        while (true) {
            if (sub != 0 && x.relative_interior(sub, z) == sub) {
                if (y.relative_interior(f.image(sub), c) == 0) return false;
            }
            if (sub == 0) break;
            sub = (sub - 1) & z;
        }
    }
    return true;
}

WeakGoodnessVerdict is_weak_good(const SpaceMap& f, int size_cap) {
    const FiniteSpace& x = f.source();
    const FiniteSpace& y = f.target();
    if (x.size() > size_cap || y.size() > size_cap)
        throw ResourceError("is_weak_good: space exceeds the size cap");
    std::vector<WeakGoodnessEntry> table;
    for (Mask u = 1;; ++u) {
        if (x.is_locally_closed(u)) {
            WeakGoodnessEntry entry;
            entry.u = u;
            Mask fu = f.image(u);
            // Candidate subsets of f(U), largest first, ties by ascending mask.
            std::vector<Mask> candidates;
            Mask sub = fu;
            while (true) {
                if (sub != 0) candidates.push_back(sub);
                if (sub == 0) break;
                sub = (sub - 1) & fu;
            }
            std::sort(candidates.begin(), candidates.end(), [](Mask a, Mask b) {
                if (popcount(a) != popcount(b)) return popcount(a) > popcount(b);
                return a < b;
            });
            for (Mask v : candidates) {
                if (y.is_locally_closed(v)) {
                    entry.ok = true;
                    entry.v = v;
                    break;
                }
            }
            table.push_back(entry);
        }
        if (u == x.full()) break;
    }
    return WeakGoodnessVerdict(f, std::move(table));
}

bool is_jacobson(const FiniteSpace& x, int size_cap) {
    if (x.size() > size_cap) throw ResourceError("is_jacobson: space exceeds the size cap");
    Mask closed = x.closed_points();
    if (x.size() == 0) return true;
    for (Mask u = 1;; ++u) {
        if (x.is_locally_closed(u) && (u & closed) == 0) return false;
        if (u == x.full()) break;
    }
    return true;
}

}  // namespace goodmap

#include <doctest.h>

#include "goodmap/enumeration.hpp"
#include "goodmap/finite_space.hpp"

using namespace goodmap;

namespace {

// Shared desk spaces. Sierpinski: point 1 lies in cl{0}, opens ∅,{0},{0,1}.
FiniteSpace sierpinski() { return make_space(2, {{1, 0}}); }
FiniteSpace indiscrete_pair() { return make_space(2, {{0, 1}, {1, 0}}); }
FiniteSpace discrete(int n) { return make_space(n, {}); }

}  // namespace

TEST_CASE("make_space: singleton, Sierpinski, indiscrete pair") {
    FiniteSpace one = make_space(1, {});
    CHECK(one.size() == 1);
    CHECK(one.closure(1) == 1);

    FiniteSpace s = sierpinski();
    CHECK(s.leq(1, 0));
    CHECK_FALSE(s.leq(0, 1));
    CHECK(s.open_sets() == std::vector<Mask>{0b00, 0b01, 0b11});

    FiniteSpace ind = indiscrete_pair();
    CHECK(ind.leq(0, 1));
    CHECK(ind.leq(1, 0));
    CHECK(ind.open_sets() == std::vector<Mask>{0b00, 0b11});
}

TEST_CASE("make_space rejects out-of-range indices") {
    CHECK_THROWS_AS(make_space(2, {{0, 2}}), MisuseError);
    CHECK_THROWS_AS(make_space(2, {{-1, 0}}), MisuseError);
}

TEST_CASE("make_space takes the reflexive-transitive closure") {
    FiniteSpace chain = make_space(3, {{2, 1}, {1, 0}});
    CHECK(chain.leq(2, 0));
    CHECK(chain.closure(0b001) == 0b111);
}

TEST_CASE("closure on the desk examples") {
    FiniteSpace s = sierpinski();
    CHECK(s.closure(0b01) == 0b11);  // generic point closes to everything
    CHECK(s.closure(0b10) == 0b10);  // closed point
    CHECK(s.closure(0) == 0);
}

TEST_CASE("locally closed on the desk examples") {
    FiniteSpace s = sierpinski();
    CHECK(s.is_locally_closed(0b01));
    CHECK(s.is_locally_closed(s.full()));
    FiniteSpace ind = indiscrete_pair();
    // Enumerating opens {∅, X} and closeds {∅, X}: no intersection equals {0}.
    CHECK_FALSE(ind.is_locally_closed(0b01));
    CHECK(ind.is_locally_closed(ind.full()));
}

TEST_CASE("irreducibility on the desk examples") {
    CHECK(sierpinski().is_irreducible(0b11));
    CHECK_FALSE(discrete(2).is_irreducible(0b11));
    CHECK(discrete(2).is_irreducible(0b01));
    CHECK_FALSE(discrete(2).is_irreducible(0));
}

TEST_CASE("irreducibility agrees with the two-closed-cover definition") {
    // Oracle: s irreducible iff nonempty and not covered by two relatively
    // closed proper subsets.
    for (int n = 1; n <= 3; ++n) {
        for (const auto& space : all_preorders(n)) {
            for (Mask s = 1; s <= space.full(); ++s) {
                bool coverable = false;
                std::vector<Mask> closeds;
                for (Mask c = 0;; ++c) {
                    if (space.is_closed(c)) closeds.push_back(c);
                    if (c == space.full()) break;
                }
                for (Mask c1 : closeds) {
                    for (Mask c2 : closeds) {
                        Mask r1 = c1 & s, r2 = c2 & s;
                        if (r1 != s && r2 != s && (r1 | r2) == s) coverable = true;
                    }
                }
                CHECK(space.is_irreducible(s) == !coverable);
            }
        }
    }
}

TEST_CASE("generic points, including non-uniqueness") {
    FiniteSpace s = sierpinski();
    CHECK(s.generic_points(0b11) == 0b01);
    FiniteSpace ind = indiscrete_pair();
    CHECK(ind.generic_points(0b11) == 0b11);  // both closures are everything
    FiniteSpace d = discrete(2);
    CHECK(d.generic_points(0b10) == 0b10);
    CHECK_THROWS_AS(d.generic_points(0b11), MisuseError);  // not irreducible
    CHECK_THROWS_AS(s.generic_points(0b01), MisuseError);  // not closed
}

TEST_CASE("sobriety: Sierpinski yes, indiscrete no, point yes") {
    CHECK(sierpinski().is_sober());
    CHECK_FALSE(indiscrete_pair().is_sober());
    CHECK(make_space(1, {}).is_sober());
}

TEST_CASE("irreducible locally closed enumeration on desk examples") {
    CHECK(make_space(1, {}).irreducible_locally_closed() == std::vector<Mask>{0b1});
    CHECK(sierpinski().irreducible_locally_closed() == std::vector<Mask>{0b01, 0b10, 0b11});
    CHECK(indiscrete_pair().irreducible_locally_closed() == std::vector<Mask>{0b11});
}

TEST_CASE("enumeration equals power-set filtering on all spaces up to 4 points") {
    for (int n = 1; n <= 4; ++n) {
        for (const auto& space : all_preorders(n)) {
            std::vector<Mask> filtered;
            for (Mask s = 1; s <= space.full(); ++s)
                if (space.is_irreducible(s) && space.is_locally_closed(s)) filtered.push_back(s);
            CHECK(space.irreducible_locally_closed() == filtered);
        }
    }
}

TEST_CASE("closure is idempotent, monotone, extensive; interior is its dual") {
    for (int n = 1; n <= 4; ++n) {
        for (const auto& space : all_preorders(n)) {
            for (Mask s = 0;; ++s) {
                Mask c = space.closure(s);
                CHECK((s & ~c) == 0);
                CHECK(space.closure(c) == c);
                CHECK(space.interior(s) == (space.full() & ~space.closure(space.full() & ~s)));
                for (Mask t = s;; ++t) {
                    if ((s & ~t) == 0) CHECK((space.closure(s) & ~space.closure(t)) == 0);
                    if (t == space.full()) break;
                }
                if (s == space.full()) break;
            }
        }
    }
}

TEST_CASE("opens are up-sets and closeds are down-sets, all subsets up to 4 points") {
    for (int n = 1; n <= 4; ++n) {
        for (const auto& space : all_preorders(n)) {
            for (Mask s = 0;; ++s) {
                bool up_set = true, down_set = true;
                for (int x = 0; x < n; ++x) {
                    for (int y = 0; y < n; ++y) {
                        if (!space.leq(x, y)) continue;
                        if ((s & bit(x)) && !(s & bit(y))) up_set = false;
                        if ((s & bit(y)) && !(s & bit(x))) down_set = false;
                    }
                }
                CHECK(space.is_open(s) == up_set);
                CHECK(space.is_closed(s) == down_set);
                if (s == space.full()) break;
            }
        }
    }
}

TEST_CASE("every irreducible closed set has a generic point; uniqueness iff T0") {
    for (int n = 1; n <= 4; ++n) {
        for (const auto& space : all_preorders(n)) {
            bool antisymmetric = true;
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    if (x != y && space.leq(x, y) && space.leq(y, x)) antisymmetric = false;
            bool all_unique = true;
            for (Mask c : space.irreducible_closed_sets()) {
                int count = popcount(space.generic_points(c));
                CHECK(count >= 1);
                if (count != 1) all_unique = false;
            }
            CHECK(all_unique == antisymmetric);
            CHECK(space.is_sober() == antisymmetric);
        }
    }
}

TEST_CASE("size cap guards enumeration") {
    FiniteSpace big = make_space(5, {});
    CHECK_THROWS_AS(big.irreducible_locally_closed(4), ResourceError);
    CHECK_NOTHROW(big.irreducible_locally_closed(5));  // explicit cap forces it
}

TEST_CASE("space map validates continuity") {
    auto s = std::make_shared<FiniteSpace>(sierpinski());
    auto d = std::make_shared<FiniteSpace>(discrete(2));
    CHECK_THROWS_AS(SpaceMap(s, d, {0, 1}), MisuseError);  // 1 ≤ 0 but f(1) and f(0) unrelated
    CHECK_NOTHROW(SpaceMap(s, d, {0, 0}));
    CHECK_THROWS_AS(SpaceMap(s, d, {0, 2}), MisuseError);
    CHECK_THROWS_AS(SpaceMap(s, d, {0}), MisuseError);
}

TEST_CASE("image and preimage") {
    auto s = std::make_shared<FiniteSpace>(sierpinski());
    SpaceMap id(s, s, {0, 1});
    CHECK(id.image(0b01) == 0b01);
    SpaceMap swapless(s, s, {1, 1});
    CHECK(swapless.image(0b11) == 0b10);
    CHECK(swapless.preimage(0b01) == 0);
    CHECK(swapless.preimage(0b10) == 0b11);
}

TEST_CASE("subspace induces the trace preorder") {
    FiniteSpace chain = make_space(3, {{2, 1}, {1, 0}});
    auto [sub, points] = subspace(chain, 0b101);
    CHECK(sub.size() == 2);
    CHECK(points == std::vector<int>{0, 2});
    CHECK(sub.leq(1, 0));  // old 2 ≤ old 0 survives
    CHECK_FALSE(sub.leq(0, 1));
}

TEST_CASE("preorder and poset counts match the literature") {
    CHECK(all_preorders(1).size() == 1);
    CHECK(all_preorders(2).size() == 4);
    CHECK(all_preorders(3).size() == 29);
    CHECK(all_preorders(4).size() == 355);
    CHECK(all_posets(2).size() == 3);
    CHECK(all_posets(3).size() == 19);
    CHECK(all_posets(4).size() == 219);
}

TEST_CASE("monotone map enumeration on desk pairs") {
    FiniteSpace s = sierpinski();
    auto self_maps = all_monotone_assignments(s, s);
    // Identity, constant-to-0, constant-to-1; the swap is not monotone.
    CHECK(self_maps == std::vector<std::vector<int>>{{0, 0}, {0, 1}, {1, 1}});
}

TEST_CASE("open covers enumerate exactly the covering families") {
    FiniteSpace s = sierpinski();
    auto covers = all_open_covers(s);
    // Nonempty opens {0},{0,1}; covering families: {X}, {{0},X}.
    CHECK(covers.size() == 2);
    for (const auto& family : covers) {
        Mask u = 0;
        for (Mask o : family) u |= o;
        CHECK(u == s.full());
    }
}

#include <doctest.h>

#include <random>

#include "goodmap/chevalley.hpp"
#include "goodmap/poly_parse.hpp"

using namespace goodmap;

namespace {

const std::vector<std::string> XY = {"x", "y"};
const std::vector<std::string> Z1 = {"z1"};
const std::vector<std::string> Z12 = {"z1", "z2"};

Ideal ideal_of(const std::vector<std::string>& gens, const std::vector<std::string>& names) {
    return Ideal(static_cast<int>(names.size()), parse_polys(gens, names));
}

AffineConstructible stratum_set(const std::vector<std::string>& present,
                                const std::vector<std::string>& absent,
                                const std::vector<std::string>& names) {
    int n = static_cast<int>(names.size());
    return AffineConstructible(n, {Stratum(ideal_of(present, names), ideal_of(absent, names))});
}

std::vector<Rational> random_point(std::mt19937_64& rng, int dim) {
    std::vector<Rational> p;
    for (int i = 0; i < dim; ++i) {
        long num = static_cast<long>(rng() % 41) - 20;
        long den = 1 + static_cast<long>(rng() % 4);
        p.push_back(make_rational(num, den));
    }
    return p;
}

// Independent Nullstellensatz oracle: p lies in f(S) iff some stratum's fiber
// system over p (with a Rabinowitsch variable for the absent part) has a
// Groebner basis other than {1}. Shares only the basis primitive with the
// image engine, not its branching logic.
bool fiber_nonempty(const PolyMap& f, const AffineConstructible& s,
                    const std::vector<Rational>& p) {
    int n = f.source_vars();
    for (const auto& st : s.strata()) {
        for (const auto& g : st.absent.generators()) {
            bool cg = g.is_nonzero_constant();
            int total = n + (cg ? 0 : 1);
            std::vector<int> same(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) same[static_cast<std::size_t>(i)] = i;
            std::vector<Poly> gens;
            for (const auto& q : st.present.generators()) gens.push_back(q.map_vars(same, total));
            for (int j = 0; j < f.target_vars(); ++j)
                gens.push_back(f.components()[j].map_vars(same, total) -
                               Poly::constant(total, p[static_cast<std::size_t>(j)]));
            if (!cg)
                gens.push_back(Poly::constant(total, Rational(1)) -
                               Poly::variable(total, n) * g.map_vars(same, total));
            if (!basis_is_unit(groebner_basis(gens, MonomialOrder::grevlex()))) return true;
        }
    }
    return false;
}

}  // namespace

TEST_CASE("stratum emptiness: desk examples") {
    CHECK(is_empty(stratum_set({"x^2"}, {"x"}, XY)));
    CHECK_FALSE(is_empty(stratum_set({"x*y - 1"}, {"y"}, XY)));  // (1,1) survives
    CHECK(is_empty(AffineConstructible::empty_set(2)));
}

TEST_CASE("complement of the empty set is the whole space") {
    AffineConstructible c = set_complement(AffineConstructible::empty_set(2));
    CHECK_FALSE(is_empty(c));
    CHECK(contains_point(c, {Rational(3), Rational(-7)}));
    CHECK(membership_equal(c, AffineConstructible::whole_space(2)));
}

TEST_CASE("a set minus itself is empty") {
    AffineConstructible axis = stratum_set({"x"}, {"1"}, {"x"});
    CHECK(is_empty(set_intersect(axis, set_complement(axis))));
}

TEST_CASE("V(x) with its complement covers the line (sampled membership)") {
    AffineConstructible axis = stratum_set({"x"}, {"1"}, {"x"});
    AffineConstructible both = set_union(axis, set_complement(axis));
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) CHECK(contains_point(both, random_point(rng, 1)));
    CHECK(membership_equal(both, AffineConstructible::whole_space(1)));
}

TEST_CASE("closure ideals: desk examples") {
    CHECK(ideal_equal(closure_ideal(stratum_set({"x*y"}, {"x"}, XY)), ideal_of({"y"}, XY)));
    CHECK(ideal_equal(closure_ideal(stratum_set({"x - 1", "y - 2"}, {"1"}, XY)),
                      ideal_of({"x - 1", "y - 2"}, XY)));
    CHECK(closure_ideal(AffineConstructible::empty_set(2)).is_unit());
}

TEST_CASE("closure is idempotent as a constructible operation") {
    for (auto s : {stratum_set({"x*y"}, {"x"}, XY), stratum_set({"x*y - 1"}, {"y"}, XY)}) {
        Ideal c = closure_ideal(s);
        CHECK(ideal_equal(closure_ideal(AffineConstructible::closed_set(c)), c));
    }
}

TEST_CASE("contains_point checks dimensions") {
    AffineConstructible s = stratum_set({"x"}, {"1"}, XY);
    CHECK_THROWS_AS(contains_point(s, {Rational(1)}), MisuseError);
}

TEST_CASE("chevalley image: hyperbola projects to the punctured line") {
    PolyMap proj = PolyMap::projection(2, 1);
    AffineConstructible hyperbola = stratum_set({"x*y - 1"}, {"1"}, XY);
    AffineConstructible image = chevalley_image(proj, hyperbola);

    AffineConstructible hand = stratum_set({"0"}, {"z1"}, Z1);
    CHECK(membership_equal(image, hand));
    CHECK(contains_point(image, {Rational(2)}));       // fiber (2, 1/2)
    CHECK_FALSE(contains_point(image, {Rational(0)}));  // x = 0 has no fiber

    std::mt19937_64 rng(20240817);
    for (int i = 0; i < 100; ++i) {
        auto p = random_point(rng, 1);
        CHECK(contains_point(image, p) == fiber_nonempty(proj, hyperbola, p));
    }
}

TEST_CASE("chevalley image: (x, xy) hits the plane minus the axis plus the origin") {
    PolyMap f(2, 2, parse_polys({"x", "x*y"}, XY));
    AffineConstructible plane = AffineConstructible::whole_space(2);
    AffineConstructible image = chevalley_image(f, plane);

    AffineConstructible hand = set_union(stratum_set({"0"}, {"z1"}, Z12),
                                         stratum_set({"z1", "z2"}, {"1"}, Z12));
    CHECK(membership_equal(image, hand));
    CHECK(contains_point(image, {Rational(0), Rational(0)}));
    CHECK_FALSE(contains_point(image, {Rational(0), Rational(1)}));

    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        auto p = random_point(rng, 2);
        CHECK(contains_point(image, p) == fiber_nonempty(f, plane, p));
    }
}

TEST_CASE("chevalley image: identity returns a membership-equal set") {
    PolyMap id = PolyMap::identity(2);
    for (auto s : {stratum_set({"x*y - 1"}, {"1"}, XY), stratum_set({"x"}, {"y"}, XY),
                   stratum_set({"0"}, {"x*y"}, XY)}) {
        CHECK(membership_equal(chevalley_image(id, s), s));
    }
}

TEST_CASE("chevalley image respects the excluded locus of a stratum") {
    // Identity on the punctured line: the puncture must survive projection.
    PolyMap id = PolyMap::identity(1);
    AffineConstructible punctured = stratum_set({"0"}, {"x"}, {"x"});
    AffineConstructible image = chevalley_image(id, punctured);
    CHECK_FALSE(contains_point(image, {Rational(0)}));
    CHECK(contains_point(image, {Rational(5)}));
    CHECK(membership_equal(image, punctured));
}

TEST_CASE("chevalley image: squaring covers the line over the closure") {
    PolyMap sq(1, 1, parse_polys({"x^2"}, {"x"}));
    AffineConstructible image = chevalley_image(sq, AffineConstructible::whole_space(1));
    CHECK(membership_equal(image, AffineConstructible::whole_space(1)));
    // The sampling oracle agrees even at points with irrational fibers.
    std::mt19937_64 rng(99);
    for (int i = 0; i < 50; ++i) {
        auto p = random_point(rng, 1);
        CHECK(contains_point(image, p) == fiber_nonempty(sq, AffineConstructible::whole_space(1), p));
    }
}

TEST_CASE("functoriality: image of a composite equals the image of the image") {
    PolyMap f(2, 2, parse_polys({"x", "x*y"}, XY));
    PolyMap g = PolyMap::projection(2, 1);
    PolyMap gf = compose(g, f);
    for (auto s : {AffineConstructible::whole_space(2), stratum_set({"y - 1"}, {"x"}, XY)}) {
        AffineConstructible direct = chevalley_image(gf, s);
        AffineConstructible staged = chevalley_image(g, chevalley_image(f, s));
        CHECK(membership_equal(direct, staged));
    }
}

TEST_CASE("good witness: hyperbola projection yields the z1 witness") {
    PolyMap proj = PolyMap::projection(2, 1);
    GoodWitness w = good_witness(proj, ideal_of({"x*y - 1"}, XY), Ideal::unit(2));
    CHECK(w.closure_ideal().is_zero_ideal());  // image closure is the whole line
    CHECK(w.witness_poly() == parse_poly("z1", Z1));
    CHECK_FALSE(radical_member(w.witness_poly(), w.closure_ideal()));
    CHECK(is_empty(set_difference(
        AffineConstructible(1, {w.certified_stratum()}), w.image())));
}

TEST_CASE("good witness: projection of the affine line to the point") {
    PolyMap to_point(1, 0, {});
    GoodWitness w = good_witness(to_point, Ideal::zero(1), Ideal::unit(1));
    CHECK(w.witness_poly() == Poly::constant(0, Rational(1)));
    CHECK_FALSE(w.closure_ideal().is_unit());
}

TEST_CASE("good witness: squaring map covers the whole line") {
    PolyMap sq(1, 1, parse_polys({"x^2"}, {"x"}));
    GoodWitness w = good_witness(sq, Ideal::zero(1), Ideal::unit(1));
    CHECK(w.witness_poly() == Poly::constant(1, Rational(1)));
}

TEST_CASE("good witness: misuse on an empty locally closed set") {
    PolyMap proj = PolyMap::projection(2, 1);
    CHECK_THROWS_AS(good_witness(proj, ideal_of({"x^2"}, XY), ideal_of({"x"}, XY)), MisuseError);
}

TEST_CASE("good witness certificates are enforced by the type") {
    PolyMap proj = PolyMap::projection(2, 1);
    AffineConstructible whole_line = AffineConstructible::whole_space(1);
    // A witness vanishing on the closure is rejected.
    CHECK_THROWS_AS(GoodWitness(proj, Ideal(1, {parse_poly("z1", Z1)}), parse_poly("z1", Z1),
                                whole_line),
                    TheoremViolation);
    // A certified open escaping the image is rejected.
    CHECK_THROWS_AS(GoodWitness(proj, Ideal::zero(1), parse_poly("z1", Z1),
                                AffineConstructible::empty_set(1)),
                    TheoremViolation);
}

TEST_CASE("poly map plumbing") {
    CHECK_THROWS_AS(PolyMap(2, 2, parse_polys({"x"}, XY)), MisuseError);
    PolyMap f(2, 2, parse_polys({"x", "x*y"}, XY));
    auto p = f.apply({Rational(2), Rational(3)});
    CHECK(p == std::vector<Rational>{Rational(2), Rational(6)});
    PolyMap gf = compose(PolyMap::projection(2, 1), f);
    CHECK(gf.components()[0] == parse_poly("x", XY));
}

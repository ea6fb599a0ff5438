#include "goodmap/affine.hpp"

namespace goodmap {

bool Stratum::is_empty() const {
    // V(I) ∖ V(J) = ∅ iff V(I) ⊆ V(J) iff every generator of J lies in √I.
    // No generators means J = (0), V(J) = A^n, so the stratum is empty.
    for (const auto& g : absent.generators())
        if (!radical_member(g, present)) return false;
    return true;
}

bool Stratum::contains(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != nvars())
        throw MisuseError("stratum membership: dimension mismatch");
    for (const auto& f : present.generators())
        if (!FieldOps<Rational>::is_zero(f.eval(point))) return false;
    for (const auto& g : absent.generators())
        if (!FieldOps<Rational>::is_zero(g.eval(point))) return true;
    return false;
}

AffineConstructible::AffineConstructible(int nvars, std::vector<Stratum> strata)
    : nvars_(nvars), strata_(std::move(strata)) {
    for (const auto& s : strata_)
        if (s.nvars() != nvars_) throw MisuseError("constructible set: mixed ring contexts");
}

void AffineConstructible::add(Stratum s) {
    if (s.nvars() != nvars_) throw MisuseError("constructible set: mixed ring contexts");
    strata_.push_back(std::move(s));
}

AffineConstructible AffineConstructible::pruned() const {
    AffineConstructible out(nvars_);
    for (const auto& s : strata_)
        if (!s.is_empty()) out.add(s);
    return out;
}

bool is_empty(const AffineConstructible& s) {
    for (const auto& st : s.strata())
        if (!st.is_empty()) return false;
    return true;
}

AffineConstructible set_union(const AffineConstructible& a, const AffineConstructible& b) {
    if (a.nvars() != b.nvars()) throw MisuseError("set_union: mixed ring contexts");
    AffineConstructible out = a;
    for (const auto& s : b.strata()) out.add(s);
    return out;
}

AffineConstructible set_intersect(const AffineConstructible& a, const AffineConstructible& b) {
    if (a.nvars() != b.nvars()) throw MisuseError("set_intersect: mixed ring contexts");
    AffineConstructible out(a.nvars());
    for (const auto& sa : a.strata()) {
        for (const auto& sb : b.strata()) {
            // (V(I1)∖V(J1)) ∩ (V(I2)∖V(J2)) = V(I1+I2) ∖ V(J1·J2).
            Stratum s(ideal_sum(sa.present, sb.present), ideal_product(sa.absent, sb.absent));
            if (!s.is_empty()) out.add(std::move(s));
        }
    }
    return out;
}

AffineConstructible set_complement(const AffineConstructible& a) {
    // ¬(V(I)∖V(J)) = (A^n ∖ V(I)) ∪ V(J); complement a union by intersecting
    // the stratum complements.
    AffineConstructible out = AffineConstructible::whole_space(a.nvars());
    for (const auto& s : a.strata()) {
        AffineConstructible piece(a.nvars());
        piece.add(Stratum(Ideal::zero(a.nvars()), s.present));
        piece.add(Stratum(s.absent, Ideal::unit(a.nvars())));
        out = set_intersect(out, piece);
    }
    return out;
}

AffineConstructible set_difference(const AffineConstructible& a, const AffineConstructible& b) {
    return set_intersect(a, set_complement(b));
}

bool membership_equal(const AffineConstructible& a, const AffineConstructible& b) {
    return is_empty(set_difference(a, b)) && is_empty(set_difference(b, a));
}

Ideal closure_ideal(const AffineConstructible& s) {
    Ideal acc = Ideal::unit(s.nvars());
    for (const auto& st : s.strata()) acc = ideal_intersect(acc, saturate(st.present, st.absent));
    return acc;
}

bool contains_point(const AffineConstructible& s, const std::vector<Rational>& point) {
    if (static_cast<int>(point.size()) != s.nvars())
        throw MisuseError("contains_point: dimension mismatch");
    for (const auto& st : s.strata())
        if (st.contains(point)) return true;
    return false;
}

PolyMap::PolyMap(int source_vars, int target_vars, std::vector<Poly> components)
    : source_vars_(source_vars), target_vars_(target_vars), components_(std::move(components)) {
    if (static_cast<int>(components_.size()) != target_vars_)
        throw MisuseError("poly map: component count must match the target variable count");
    for (const auto& c : components_)
        if (c.nvars() != source_vars_) throw MisuseError("poly map: mixed ring contexts");
}

PolyMap PolyMap::identity(int nvars) {
    std::vector<Poly> comps;
    for (int i = 0; i < nvars; ++i) comps.push_back(Poly::variable(nvars, i));
    return PolyMap(nvars, nvars, std::move(comps));
}

PolyMap PolyMap::projection(int source_vars, int target_vars) {
    if (target_vars > source_vars) throw MisuseError("projection: target larger than source");
    std::vector<Poly> comps;
    for (int i = 0; i < target_vars; ++i) comps.push_back(Poly::variable(source_vars, i));
    return PolyMap(source_vars, target_vars, std::move(comps));
}

std::vector<Rational> PolyMap::apply(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != source_vars_)
        throw MisuseError("poly map: dimension mismatch");
    std::vector<Rational> out;
    out.reserve(components_.size());
    for (const auto& c : components_) out.push_back(c.eval(point));
    return out;
}

PolyMap compose(const PolyMap& second, const PolyMap& first) {
    if (second.source_vars() != first.target_vars())
        throw MisuseError("poly map composition: middle rings differ");
    std::vector<Poly> comps;
    comps.reserve(static_cast<std::size_t>(second.target_vars()));
    for (const auto& c : second.components()) {
        // Substitute the components of `first` into c.
        Poly acc(first.source_vars());
        for (const auto& [m, coeff] : c.terms()) {
            Poly term = Poly::constant(first.source_vars(), coeff);
            for (int v = 0; v < second.source_vars(); ++v)
                for (unsigned e = 0; e < m[v]; ++e) term = term * first.components()[v];
            acc = acc + term;
        }
        comps.push_back(acc);
    }
    return PolyMap(first.source_vars(), second.target_vars(), std::move(comps));
}

}  // namespace goodmap

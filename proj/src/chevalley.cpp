#include "goodmap/chevalley.hpp"

#include <algorithm>

namespace goodmap {

namespace {

// Leading coefficient of h in (k[z])[u] where u is the first `block` variables:
// the z-polynomial multiplying the maximal u-monomial. h must involve u.
Poly block_leading_coefficient(const Poly& h, int block) {
    MonomialOrder ord = MonomialOrder::block(block);
    const Monomial& lead = h.leading_term(ord).first;
    std::vector<Poly::Term> picked;
    for (const auto& [m, c] : h.terms()) {
        bool same_block = true;
        for (int i = 0; i < block && same_block; ++i) same_block = m[i] == lead[i];
        if (!same_block) continue;
        Monomial tail = m;
        for (int i = 0; i < block; ++i) tail[i] = 0;
        picked.emplace_back(std::move(tail), c);
    }
    return Poly::from_terms(h.nvars(), std::move(picked));
}

// Computes { z : the fiber of V(gens) over z is nonempty } as a constructible
// subset of the z-space, eliminating the first `block` variables. Exact over
// the algebraic closure.
class FiberLocus {
public:
    FiberLocus(int block, int target_vars, const ResourceLimits& lim)
        : block_(block), target_(target_vars), lim_(lim), out_(target_vars) {
        down_.assign(static_cast<std::size_t>(block_ + target_), -1);
        for (int i = 0; i < target_; ++i) down_[static_cast<std::size_t>(block_ + i)] = i;
    }

    AffineConstructible run(std::vector<Poly> gens) {
        recurse(std::move(gens));
        return out_.pruned();
    }

private:
    void recurse(std::vector<Poly> gens) {
        if (++branches_ > lim_.max_branches)
            throw ResourceError("constructible image: branch guard exceeded");
        auto gb = groebner_basis(gens, MonomialOrder::block(block_), lim_);
        if (basis_is_unit(gb)) return;

        std::vector<Poly> elim;   // basis elements in k[z] alone
        std::vector<Poly> mixed;  // basis elements involving the block
        for (const auto& h : gb)
            (h.supported_on_tail(block_) ? elim : mixed).push_back(h);

        std::vector<Poly> elim_down;
        for (const auto& h : elim) elim_down.push_back(h.map_vars(down_, target_));
        Ideal e(target_, elim_down);

        if (mixed.empty()) {
            // Cylinder over V(E): every fiber is the whole block.
            out_.add(Stratum(std::move(e), Ideal::unit(target_)));
            return;
        }

        // Certified locus: all block-leading coefficients survive
        // specialization, so the specialized basis has the same leading
        // terms, none of them constant: the fiber ideal stays proper.
        std::vector<Poly> coeffs;
        for (const auto& h : mixed) {
            Poly c = block_leading_coefficient(h, block_);
            if (c.is_nonzero_constant()) continue;
            c = c.scaled(Rational(1) / c.leading_term(MonomialOrder::grevlex()).second);
            if (std::find(coeffs.begin(), coeffs.end(), c) == coeffs.end())
                coeffs.push_back(std::move(c));
        }
        Poly product = Poly::constant(block_ + target_, Rational(1));
        for (const auto& c : coeffs) {
            product = product * c;
            detail::check_poly(product, lim_);
        }
        out_.add(Stratum(e, Ideal(target_, {product.map_vars(down_, target_)})));

        // Branch into each coefficient's vanishing locus; adding a reduced
        // basis element's leading coefficient strictly enlarges the ideal.
        for (const auto& c : coeffs) {
            std::vector<Poly> extended = gb;
            extended.push_back(c);
            recurse(std::move(extended));
        }
    }

    int block_;
    int target_;
    const ResourceLimits& lim_;
    AffineConstructible out_;
    std::vector<int> down_;
    long branches_ = 0;
};

// Embed a source-ring polynomial into k[w..., x, z] with `pre` new leading
// variables and `post` new trailing ones.
Poly embed(const Poly& p, int pre, int post) {
    std::vector<int> idx(static_cast<std::size_t>(p.nvars()));
    for (int i = 0; i < p.nvars(); ++i) idx[static_cast<std::size_t>(i)] = pre + i;
    return p.map_vars(idx, pre + p.nvars() + post);
}

}  // namespace

AffineConstructible chevalley_image(const PolyMap& f, const AffineConstructible& s,
                                    const ResourceLimits& lim) {
    if (s.nvars() != f.source_vars())
        throw MisuseError("chevalley_image: set does not live in the source ring");
    int n = f.source_vars();
    int m = f.target_vars();
    AffineConstructible out(m);

    for (const auto& stratum : s.strata()) {
        // V(I)∖V(J) = union over generators g of J of V(I)∖V(g).
        for (const auto& g : stratum.absent.generators()) {
            bool constant_g = g.is_nonzero_constant();
            int extra = constant_g ? 0 : 1;  // Rabinowitsch variable w
            int total = extra + n + m;
            std::vector<Poly> gens;
            for (const auto& p : stratum.present.generators()) gens.push_back(embed(p, extra, m));
            if (!constant_g) {
                Poly w = Poly::variable(total, 0);
                gens.push_back(Poly::constant(total, Rational(1)) - w * embed(g, 1, m));
            }
            for (int j = 0; j < m; ++j)
                gens.push_back(Poly::variable(total, extra + n + j) - embed(f.components()[j], extra, m));
            out = set_union(out, FiberLocus(extra + n, m, lim).run(std::move(gens)));
        }
    }
    return out.pruned();
}

GoodWitness::GoodWitness(const PolyMap& f, Ideal closure, Poly witness, AffineConstructible image)
    : closure_(std::move(closure)),
      witness_(std::move(witness)),
      certified_(closure_, Ideal(closure_.nvars(), {witness_})),
      image_(std::move(image)) {
    if (f.target_vars() != closure_.nvars())
        throw MisuseError("good witness: closure ideal lives in the wrong ring");
    // Certificate 1: the witness open is nonempty on the closure.
    if (radical_member(witness_, closure_))
        throw TheoremViolation("good witness: witness vanishes on the whole closure");
    // Certificate 2: D(s) ∩ V(E) is inside the computed image.
    AffineConstructible certified(closure_.nvars(), {certified_});
    if (!is_empty(set_difference(certified, image_)))
        throw TheoremViolation("good witness: certified open escapes the image");
}

GoodWitness good_witness(const PolyMap& f, const Ideal& z, const Ideal& j,
                         const ResourceLimits& lim) {
    if (z.nvars() != f.source_vars() || j.nvars() != f.source_vars())
        throw MisuseError("good_witness: ideals do not live in the source ring");
    AffineConstructible u(f.source_vars(), {Stratum(z, j)});
    if (is_empty(u)) throw MisuseError("good_witness: V(Z)∖V(J) is empty");

    AffineConstructible image = chevalley_image(f, u, lim);
    Ideal closure = closure_ideal(image);

    AffineConstructible boundary =
        set_difference(AffineConstructible::closed_set(closure), image);
    if (is_empty(boundary))
        return GoodWitness(f, closure, Poly::constant(f.target_vars(), Rational(1)), image);

    Ideal b = closure_ideal(boundary);
    for (const auto& candidate : b.basis(MonomialOrder::grevlex())) {
        if (!radical_member(candidate, closure))
            return GoodWitness(f, closure, candidate, image);
    }
    throw TheoremViolation(
        "good_witness: boundary closure covers the image closure (input not irreducible?)");
}

}  // namespace goodmap

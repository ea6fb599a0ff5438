#pragma once

#include "goodmap/affine.hpp"
#include "goodmap/limits.hpp"

namespace goodmap {

// Raised when the witness search comes up empty even though its input was
// asserted irreducible; it must never fire on genuinely irreducible input.
class TheoremViolation : public std::logic_error {
public:
    explicit TheoremViolation(const std::string& what) : std::logic_error(what) {}
};

// Image of a constructible set under a polynomial map, as a constructible set
// membership-equal to f(S) over the algebraic closure.
//
// Per stratum V(I)∖V(J) and generator g of J, the graph ideal
// I + (1 − w·g) + (z_j − f_j(x)) is formed in k[w, x, z] and the whole (w, x)
// block is eliminated under a block order. The elimination-ideal locus minus
// the common vanishing of the basis' block-leading coefficients is certified
// image (the locus where specialization keeps every leading term, so the
// specialized basis stays a proper-ideal Groebner basis of the fiber), and
// each leading-coefficient vanishing locus is re-entered with the generators
// extended by that coefficient. Each branch strictly enlarges its ideal, so
// the recursion terminates.
AffineConstructible chevalley_image(const PolyMap& f, const AffineConstructible& s,
                                    const ResourceLimits& lim = default_limits());

// Goodness witness for an affine morphism on the irreducible-asserted locally
// closed set U = V(Z)∖V(J): closure E of the image, a witness polynomial s
// with s ∉ √E, and the certified stratum D(s) ∩ V(E) ⊆ f(U). Both facts are
// re-checked on construction.
class GoodWitness {
public:
    GoodWitness(const PolyMap& f, Ideal closure, Poly witness, AffineConstructible image);

    const Ideal& closure_ideal() const { return closure_; }
    const Poly& witness_poly() const { return witness_; }
    const Stratum& certified_stratum() const { return certified_; }
    const AffineConstructible& image() const { return image_; }

private:
    Ideal closure_;
    Poly witness_;
    Stratum certified_;
    AffineConstructible image_;
};

// Realizes goodness for affine polynomial maps: computes the image of
// U = V(Z)∖V(J), its closure ideal E, the closure B of V(E)∖image, and picks
// a witness s ∈ B with s ∉ √E (s = 1 when the image covers its closure).
// Irreducibility of Z is asserted by the caller; the returned certificates
// are verified regardless.
GoodWitness good_witness(const PolyMap& f, const Ideal& z, const Ideal& j,
                         const ResourceLimits& lim = default_limits());

}  // namespace goodmap

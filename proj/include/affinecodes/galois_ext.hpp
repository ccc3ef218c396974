#ifndef AFFINECODES_GALOIS_EXT_HPP
#define AFFINECODES_GALOIS_EXT_HPP

#include "affinecodes/algebra.hpp"

namespace afc {

/// Unramified extension S = R[Y]/<g(Y)> of degree m over the chain ring R,
/// with g basic irreducible.  The Teichmuller set of S is cyclic of order
/// q^m - 1 away from zero; the Frobenius generates the automorphism group
/// of S/R and the trace maps onto R.
struct GaloisExtension {
    RingPtr base;
    uint32_t m = 0;
    AlgebraPtr s;  ///< S as a univariate quotient algebra over the base

    uint64_t residue_size() const;  ///< q^m

    AElem from_base(const RElem& r) const;
    AElem gen() const;  ///< the class of Y

    /// Teichmuller digits of xi within S (digit^(q^m) = digit).
    std::vector<AElem> teichmuller_digits(const AElem& xi) const;
    AElem teichmuller(const AElem& xi) const;

    /// The R-automorphism extending x -> x^q on the Teichmuller set.
    AElem frobenius(const AElem& xi) const;
    /// Tr(xi) = sum of the m Frobenius conjugates; always lands in R.
    RElem trace(const AElem& xi) const;

    /// Minimal polynomial over R of a Teichmuller element (the product of
    /// (Y - conjugate) over the Frobenius orbit; coefficients are asserted
    /// to be constants).
    RPoly minimal_polynomial(const AElem& theta) const;

    /// Multiplicative order of a unit Teichmuller element.
    uint64_t teichmuller_order(const AElem& theta) const;
};

/// Build the extension; the modulus must be monic of degree m and
/// irreducible mod p.
GaloisExtension make_extension(RingPtr base, uint32_t m, const RPoly& ext_modulus);

/// Default modulus: Hensel lift (dividing X^(q^m - 1) - 1) of the first
/// irreducible of degree m over F_p.  Requires a prime-subring base (d = 1).
GaloisExtension make_extension(RingPtr base, uint32_t m);

}  // namespace afc

#endif

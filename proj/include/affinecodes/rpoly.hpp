#ifndef AFFINECODES_RPOLY_HPP
#define AFFINECODES_RPOLY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "affinecodes/chain_ring.hpp"

namespace afc {

/// Dense univariate polynomial over a chain ring.  Coefficient 0 is the
/// constant term; the representation keeps no leading zeros.
class RPoly {
public:
    RPoly() = default;
    explicit RPoly(RingPtr ring) : ring_(std::move(ring)) {}
    RPoly(RingPtr ring, std::vector<RElem> coeffs);
    static RPoly from_ints(const RingPtr& ring, const std::vector<int64_t>& coeffs);
    static RPoly monomial(const RingPtr& ring, size_t degree, const RElem& c);
    /// X^n - 1.
    static RPoly x_pow_minus_one(const RingPtr& ring, size_t n);

    const RingPtr& ring() const { return ring_; }
    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int64_t degree() const { return static_cast<int64_t>(c_.size()) - 1; }
    const std::vector<RElem>& coeffs() const { return c_; }
    RElem coeff(size_t i) const;
    RElem leading() const;
    bool is_monic() const;

    RPoly operator+(const RPoly& o) const;
    RPoly operator-(const RPoly& o) const;
    RPoly operator*(const RPoly& o) const;
    RPoly operator*(const RElem& s) const;
    RPoly operator-() const;
    bool operator==(const RPoly& o) const;
    bool operator!=(const RPoly& o) const { return !(*this == o); }

    /// Division with remainder by a divisor whose leading coefficient is a
    /// unit.  Returns (quotient, remainder).
    std::pair<RPoly, RPoly> divmod(const RPoly& divisor) const;

    RElem eval(const RElem& x) const;

    /// Reduce every coefficient mod p (canonical lift of the image over the
    /// residue field).
    RPoly residue() const;
    /// Coefficientwise multiplication by p^k / exact division by p^k.
    RPoly shift_up(uint32_t k) const;
    RPoly shift_down(uint32_t k) const;

    /// Reciprocal polynomial X^deg * f(1/X).
    RPoly reciprocal() const;

    std::string to_string(const std::string& var = "X") const;

private:
    void trim();
    RingPtr ring_;
    std::vector<RElem> c_;
};

// ---- residue-field (F_q = R/pR) polynomial helpers -----------------------
// All inputs and outputs are canonical lifts: polynomials whose coefficients
// have coordinates < p.

RPoly fq_mul(const RPoly& a, const RPoly& b);
std::pair<RPoly, RPoly> fq_divmod(const RPoly& a, const RPoly& b);
RPoly fq_gcd(RPoly a, RPoly b);  // monic gcd
/// g = gcd(a,b) monic together with s, t such that s*a + t*b = g.
struct FqEuclid {
    RPoly g, s, t;
};
FqEuclid fq_ext_euclid(const RPoly& a, const RPoly& b);
RPoly fq_pow_mod(const RPoly& base, uint64_t e, const RPoly& mod);

/// Irreducibility over the residue field F_q of the canonical lift fbar
/// (computed on fbar.residue()).
bool is_irreducible_mod_p(const RPoly& f);

/// Unique monic divisor H of X^N - 1 over R with H = fbar (mod p), obtained
/// by Hensel lifting.  Requires gcd(N, p) = 1 and fbar | X^N - 1 over the
/// residue field; throws std::invalid_argument otherwise.
RPoly hensel_lift_factor(const RPoly& fbar, uint64_t N, const RingPtr& ring);

/// Lexicographically first monic irreducible of degree d over F_p,
/// enumerating coefficient vectors (c_{d-1},...,c_0) as ascending base-p
/// integers.
RPoly first_irreducible(const RingPtr& ring, uint32_t degree);

}  // namespace afc

#endif

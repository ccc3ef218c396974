#ifndef AFFINECODES_CHAIN_RING_HPP
#define AFFINECODES_CHAIN_RING_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace afc {

class ChainRing;
class RElem;
using RingPtr = std::shared_ptr<const ChainRing>;

/// Galois ring GR(p^t, d): the unramified degree-d extension of Z/p^t.
/// Covers Z/p^t (d = 1) and the finite fields F_q (t = 1).  Elements are
/// residue classes of polynomials of degree < d over Z/p^t modulo a monic
/// basic irreducible; the maximal ideal is generated by p and the ideal
/// lattice is the chain <p^0> > <p^1> > ... > <p^t> = 0.
class ChainRing : public std::enable_shared_from_this<ChainRing> {
public:
    /// Build GR(p^t, d) with a default modulus.  For d = 1 the modulus is X;
    /// for d > 1 it is the lift of the lexicographically first monic
    /// irreducible of degree d over F_p that divides X^(p^d - 1) - 1, so the
    /// class of X is always a Teichmuller element.
    static RingPtr make(uint64_t p, uint32_t t, uint32_t d);

    /// Build GR(p^t, d) with an explicit monic modulus (coefficients
    /// c[0] + c[1] X + ... + c[d] X^d, c[d] = 1 after reduction mod p^t).
    /// The modulus must be irreducible mod p.
    static RingPtr make(uint64_t p, uint32_t t, uint32_t d,
                        const std::vector<int64_t>& modulus);

    uint64_t p() const { return p_; }
    uint32_t t() const { return t_; }
    uint32_t d() const { return d_; }
    uint64_t pt() const { return pt_; }  ///< p^t, the characteristic
    uint64_t q() const { return q_; }    ///< p^d, the residue field size

    /// Monic modulus, length d+1, coefficients reduced into [0, p^t).
    const std::vector<uint64_t>& modulus() const { return modulus_; }

    RElem zero() const;
    RElem one() const;
    RElem from_int(int64_t v) const;
    /// Element with the given power-basis coordinates (reduced mod p^t).
    RElem from_coeffs(const std::vector<int64_t>& c) const;
    /// The class of X (only meaningful for d > 1; equals 0 for the default
    /// d = 1 modulus).
    RElem gen() const;

    /// All p^(t*d) elements in a fixed deterministic order.
    std::vector<RElem> all_elements() const;

    bool same_as(const ChainRing& other) const;

    std::string describe() const;

    // internal: x^d .. x^(2d-2) reduced by the modulus
    const std::vector<std::vector<uint64_t>>& power_table() const { return pow_table_; }

private:
    ChainRing(uint64_t p, uint32_t t, uint32_t d, std::vector<uint64_t> modulus);

    uint64_t p_, pt_, q_;
    uint32_t t_, d_;
    std::vector<uint64_t> modulus_;
    std::vector<std::vector<uint64_t>> pow_table_;
};

/// Element of a chain ring, stored as its power-basis coordinates
/// (d residues mod p^t).  Every nonzero x factors uniquely as p^i * u with
/// u a unit and 0 <= i < t; the exponent i is the norm (valuation) of x.
class RElem {
public:
    RElem() = default;
    RElem(RingPtr ring, std::vector<uint64_t> coeffs);

    const RingPtr& ring() const { return ring_; }
    const std::vector<uint64_t>& coeffs() const { return c_; }
    uint64_t coeff(size_t i) const { return c_[i]; }

    bool is_zero() const;
    bool is_one() const;

    /// Norm of the element: the exponent i in x = p^i * unit; t for 0.
    uint32_t val() const;
    bool is_unit() const { return val() == 0; }

    /// Canonical unit u with x = p^val * u (integer division of each
    /// coordinate by p^val).  Undefined for 0.
    RElem unit_part() const;

    RElem operator+(const RElem& o) const;
    RElem operator-(const RElem& o) const;
    RElem operator*(const RElem& o) const;
    RElem operator-() const;
    RElem& operator+=(const RElem& o) { return *this = *this + o; }
    RElem& operator-=(const RElem& o) { return *this = *this - o; }
    RElem& operator*=(const RElem& o) { return *this = *this * o; }
    bool operator==(const RElem& o) const;
    bool operator!=(const RElem& o) const { return !(*this == o); }

    /// Multiplicative inverse; throws std::domain_error for non-units.
    RElem inv() const;
    RElem pow(uint64_t e) const;

    /// Reduce every coordinate mod p^k (canonical coset representative
    /// modulo the ideal <p^k>).
    RElem reduce_mod_pk(uint32_t k) const;
    /// Coordinatewise integer division by p^k; exact only if val() >= k.
    RElem shift_down(uint32_t k) const;
    /// Multiply by p^k.
    RElem shift_up(uint32_t k) const;
    /// Reduce coordinates mod p (image in the residue field, as the
    /// canonical lift).
    RElem residue() const;

    /// Teichmuller digits: x = sum_i p^i g_i with g_i^q = g_i, i < t.
    std::vector<RElem> teichmuller_digits() const;
    /// The Teichmuller representative of x mod p (digit 0).
    RElem teichmuller() const;

    std::string to_string(const std::string& var = "w") const;

private:
    void check_same(const RElem& o) const;

    RingPtr ring_;
    std::vector<uint64_t> c_;
};

/// Valuation/unit factorization: x = p^first * second.  For x = 0 the
/// result is (t, nullopt).
std::pair<uint32_t, std::optional<RElem>> unit_decompose(const RElem& x);

}  // namespace afc

#endif

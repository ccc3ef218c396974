#ifndef AFFINECODES_ALGEBRA_HPP
#define AFFINECODES_ALGEBRA_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "affinecodes/chain_ring.hpp"
#include "affinecodes/order.hpp"
#include "affinecodes/rpoly.hpp"

namespace afc {

class AlgebraSpec;
class AElem;
using AlgebraPtr = std::shared_ptr<const AlgebraSpec>;

/// The quotient R[X_1..X_r] / <t_1(X_1),...,t_r(X_r)> with monic univariate
/// relations t_j of degree n_j.  Residue classes have a unique representative
/// supported on the box {e : 0 <= e_j < n_j}; monomials of the box are
/// enumerated in a fixed admissible order.
class AlgebraSpec : public std::enable_shared_from_this<AlgebraSpec> {
public:
    static AlgebraPtr make(RingPtr ring, std::vector<RPoly> relations, MonomialOrder order);

    const RingPtr& ring() const { return ring_; }
    uint32_t num_vars() const { return r_; }
    const std::vector<RPoly>& relations() const { return relations_; }
    const MonomialOrder& order() const { return order_; }
    const std::vector<uint32_t>& dims() const { return dims_; }  ///< n_j
    uint64_t box_size() const { return n_; }                     ///< n = prod n_j

    /// Mixed-radix index of a box exponent (last variable fastest).
    size_t box_index(const Exp& e) const;
    const Exp& box_exp(size_t idx) const { return box_exps_[idx]; }

    /// Box monomials sorted ascending in the monomial order (as box indices).
    const std::vector<size_t>& sorted_asc() const { return sorted_asc_; }
    /// Rank of a box monomial in the ascending enumeration.
    size_t asc_rank(size_t box_idx) const { return asc_rank_[box_idx]; }

    bool in_box(const Exp& e) const;

    AElem zero() const;
    AElem one() const;
    AElem monomial(const Exp& e, const RElem& c) const;
    AElem monomial(const Exp& e) const;
    AElem from_scalar(const RElem& c) const;
    AElem from_int(int64_t v) const;

    /// Box representative of X^e for arbitrary e in N_0^r (reduces every
    /// variable by its relation).
    AElem reduce_monomial(const Exp& e) const;

    bool same_as(const AlgebraSpec& o) const;
    std::string describe() const;

    /// X_j^k mod t_j for k up to 2(n_j - 1), as dense univariate coefficients.
    const std::vector<RElem>& univariate_power(uint32_t j, uint32_t k) const;

private:
    AlgebraSpec(RingPtr ring, std::vector<RPoly> relations, MonomialOrder order);

    RingPtr ring_;
    uint32_t r_;
    std::vector<RPoly> relations_;
    MonomialOrder order_;
    std::vector<uint32_t> dims_;
    uint64_t n_;
    std::vector<Exp> box_exps_;
    std::vector<size_t> sorted_asc_;
    std::vector<size_t> asc_rank_;
    std::vector<std::vector<std::vector<RElem>>> upow_;  // [j][k] for k in [0, 2 n_j - 2]
};

struct LeadingData {
    uint32_t norm;  ///< min valuation over nonzero coefficients
    Exp ldg;        ///< order-max exponent among coefficients of minimal valuation
    RElem lc;
};

/// Element of the affine algebra; dense box coefficients.
class AElem {
public:
    AElem() = default;
    AElem(AlgebraPtr spec, std::vector<RElem> coeffs);
    explicit AElem(AlgebraPtr spec);  // zero

    const AlgebraPtr& spec() const { return spec_; }
    const std::vector<RElem>& coeffs() const { return c_; }
    const RElem& coeff(size_t idx) const { return c_[idx]; }
    const RElem& coeff(const Exp& e) const;
    void set_coeff(const Exp& e, const RElem& v);
    void set_coeff(size_t idx, const RElem& v) { c_[idx] = v; }

    bool is_zero() const;
    std::vector<Exp> support() const;

    AElem operator+(const AElem& o) const;
    AElem operator-(const AElem& o) const;
    AElem operator*(const AElem& o) const;
    AElem operator-() const;
    AElem operator*(const RElem& s) const;
    AElem& operator+=(const AElem& o) { return *this = *this + o; }
    AElem& operator-=(const AElem& o) { return *this = *this - o; }
    bool operator==(const AElem& o) const;
    bool operator!=(const AElem& o) const { return !(*this == o); }

    /// Multiply by the box representative of X^e (e need not be in the box).
    AElem shift(const Exp& e) const;

    /// Scalar multiplication by p^k / coefficientwise exact division / mod-p
    /// image (canonical lift).
    AElem shift_up(uint32_t k) const;
    AElem shift_down(uint32_t k) const;
    AElem residue() const;

    /// Norm, leading degree, leading coefficient.  Throws for 0.
    LeadingData leading_data() const;
    /// Norm with the zero convention ||0|| = t.
    uint32_t norm() const;

    std::string to_string() const;

private:
    void check_same(const AElem& o) const;
    AlgebraPtr spec_;
    std::vector<RElem> c_;
};

/// Coefficient listing in ascending monomial order: R-module bijection
/// between the algebra and R^n.
std::vector<RElem> phi(const AElem& f);
AElem phi_inverse(const AlgebraPtr& spec, std::span<const RElem> v);

// ---- L-reduction ------------------------------------------------------------

struct ReduceOptions {
    size_t max_steps = 0;  ///< 0: automatic bound
};

struct ReduceResult {
    AElem value;
    size_t steps = 0;
};

/// One deterministic L-reduction step of f modulo chi: cancel the order-
/// largest coefficient of f that matches a shifted leading monomial of some
/// g in chi (first such g in the given order, shifted leading monomial kept
/// inside the box), using the canonical multiplier r with r*Lc(g) = Cf.
/// Returns nullopt if f is normal mod chi.
std::optional<AElem> l_reduce_step(const AElem& f, std::span<const AElem> chi);

/// Iterated reduction until normal; throws std::runtime_error if the step
/// bound is exceeded.
ReduceResult l_reduce_full(const AElem& f, std::span<const AElem> chi,
                           const ReduceOptions& opts = {});

bool is_normal(const AElem& f, std::span<const AElem> chi);

// ---- Ferrers diagrams -------------------------------------------------------

/// Finite downward-closed subset of N_0^r.
struct FerrersDiagram {
    std::vector<Exp> cells;  // sorted lexicographically for canonical compare

    static FerrersDiagram from_cells(std::vector<Exp> cells);
    bool contains(const Exp& e) const;
    size_t size() const { return cells.size(); }
    bool operator==(const FerrersDiagram& o) const { return cells == o.cells; }
};

bool is_downward_closed(const std::vector<Exp>& cells);

/// Minimal elements of N_0^r minus F under componentwise order.  The
/// optional ambient dims bound the search (defaults to F extents + 1).
std::vector<Exp> kf_minimals(const FerrersDiagram& f, uint32_t r,
                             const std::vector<uint32_t>* ambient_dims = nullptr);

}  // namespace afc

#endif

#ifndef AFFINECODES_LINALG_HPP
#define AFFINECODES_LINALG_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "affinecodes/chain_ring.hpp"

namespace afc {

using RVec = std::vector<RElem>;

RVec rvec_zero(const RingPtr& ring, size_t n);
bool rvec_is_zero(const RVec& v);
RVec rvec_add(const RVec& a, const RVec& b);
RVec rvec_sub(const RVec& a, const RVec& b);
RVec rvec_scale(const RVec& a, const RElem& s);
RElem rvec_dot(const RVec& a, const RVec& b);

/// Canonical echelon form of an R-submodule of R^n over the chain ring R:
/// strictly increasing pivot positions, pivots normalized to p^e, entries
/// above a pivot reduced mod p^e, row span closed under multiplication by p.
/// The form depends only on the row span; two generating sets of the same
/// module produce identical forms.
struct HowellForm {
    RingPtr ring;
    size_t cols = 0;
    std::vector<RVec> rows;
    std::vector<size_t> piv_pos;
    std::vector<uint32_t> piv_val;

    uint64_t log_q_size() const;  ///< module size as a power of q = p^d

    /// Pivot valuation at a position (t where no pivot sits).
    uint32_t pivot_val_at(size_t pos) const;

    bool contains(RVec v) const;
    /// Canonical representative of v + span(rows).
    RVec coset_reduce(RVec v) const;
    /// Coefficients lambda with sum(lambda_i * row_i) = v, when v is in the
    /// span; reduction is pivot-greedy and deterministic.
    std::optional<RVec> express(RVec v) const;

    bool operator==(const HowellForm& o) const;
    bool operator!=(const HowellForm& o) const { return !(*this == o); }
};

HowellForm howell_form(std::vector<RVec> generators, RingPtr ring, size_t cols);

/// Generators of {x in R^n : A x = 0} where the equations are the rows of A.
std::vector<RVec> kernel_mod_R(const std::vector<RVec>& equations, const RingPtr& ring,
                               size_t unknowns);

/// One solution of A x = b together with the kernel of A (for canonical
/// coset representatives).  particular is nullopt when no solution exists.
struct LinearSolution {
    std::optional<RVec> particular;
    HowellForm kernel;
};
LinearSolution solve_mod_R(const std::vector<RVec>& equations, const RVec& rhs,
                           const RingPtr& ring, size_t unknowns);

/// {v : p^j * v in span(M)}, as a Howell form.
HowellForm colon_form(const HowellForm& m, uint32_t j);

/// Reduced row echelon form over the residue field F_q; inputs and outputs
/// are canonical lifts (coordinates < p).
struct FqEchelon {
    std::vector<RVec> rows;
    std::vector<size_t> piv_pos;
};
FqEchelon fq_rref(std::vector<RVec> rows, const RingPtr& ring, size_t cols);

}  // namespace afc

#endif

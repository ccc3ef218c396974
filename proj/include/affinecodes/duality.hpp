#ifndef AFFINECODES_DUALITY_HPP
#define AFFINECODES_DUALITY_HPP

#include "affinecodes/cgs.hpp"

namespace afc {

/// R-linear dual {e : Phi(e).Phi(c) = 0 for all c in C}.  An R-module,
/// in general not closed under the algebra action; generators are returned
/// as the rows of its canonical echelon form.
struct RDualResult {
    std::vector<Word> generators;
    uint64_t log_q_size = 0;
};
RDualResult r_dual(const CodeModule& code);

/// Conjugation sum f_i X^(n-i) for algebras with relations X_j^{n_j} - 1;
/// an involution.
AElem conjugate(const AElem& f);
bool is_abelian_type(const AlgebraSpec& spec);

/// Hermitian dual {e : sum_j e_j * conj(c_j) = 0}; an A-code.
CodeModule hermitian_dual(const CodeModule& code);

/// A-dual {e in E : sum_i e_i c_i = 0 in A for all c in C}; always an
/// A-code.  Generators of the result are the canonical generator matrix
/// rows of the dual module.
CodeModule a_dual(const CodeModule& code);

/// Annihilator ideal of the ideal generated by the given elements
/// (the intersection of the elementwise annihilators).
CodeModule annihilator(const std::vector<AElem>& gens, const AlgebraPtr& spec);

/// Extend a dual word of the punctured subcode to a dual word of C:
/// solves c1 * G_j = -sum_{w>=2} c'_w G_{jw} over the generator rows.
/// Throws std::runtime_error when unsolvable (non-Frobenius algebra or an
/// invalid input word).
Word lift_dual_word(const Word& cprime, const CodeModule& code);

/// Parity-check construction for univariate algebras: annihilator block on
/// top of the lifted rows of the punctured subcode's parity-check matrix.
/// The Frobenius hypothesis is not decided up front; the result carries
/// post-hoc verification flags instead.
struct ParityCheckResult {
    std::vector<Word> h_rows;      ///< assembled block matrix
    size_t annihilator_rows = 0;   ///< leading rows (G'_i | 0 ... 0)
    std::vector<Word> reduced;     ///< minimized canonical rows of span(H)
    uint64_t dual_log_q = 0;
    bool orthogonal = false;
    bool index_product = false;
    bool lifts_solved = true;
    bool verified() const { return orthogonal && index_product && lifts_solved; }
};
ParityCheckResult parity_check_matrix(const CodeModule& code);

bool is_self_dual(const CodeModule& code);

/// Drop rows that stay in the A-span of the remaining ones (scanning last
/// to first); deterministic minimization used for display.
std::vector<Word> minimize_rows(std::vector<Word> rows, const AlgebraPtr& spec, size_t l);

}  // namespace afc

#endif

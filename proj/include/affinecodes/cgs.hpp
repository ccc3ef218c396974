#ifndef AFFINECODES_CGS_HPP
#define AFFINECODES_CGS_HPP

#include <string>

#include "affinecodes/code.hpp"

namespace afc {

/// One generator of a characteristic set: the formal polynomial
/// X^label - tail with tail supported on the level's Ferrers diagram.
/// `value` is the box representative of that polynomial in the algebra
/// (zero exactly when the generator is a lift of a defining relation).
struct CgsGen {
    Exp label;
    AElem tail;
    AElem value;
};

/// One level of a canonical generating system: scale exponent b, Ferrers
/// diagram of the level, and its characteristic set (a Krull system: the
/// mod-p image is a reduced Groebner basis of the same size).
struct CgsLevel {
    uint32_t b = 0;
    FerrersDiagram ferrers;
    std::vector<CgsGen> chi;
};

/// Layered generating system chi_0 u p^{b_1} chi_1 u ... of an ideal,
/// with 0 = b_0 < b_1 < ... < b_x < t and strictly decreasing diagrams.
struct IdealCGS {
    std::vector<CgsLevel> levels;
    uint64_t log_q_size = 0;

    /// The scaled algebra elements p^{b_m} * g over all levels (zero lifts
    /// of relations included).
    std::vector<AElem> scaled_elements() const;
};

/// Per-block data of the canonical generator matrix: the block component
/// (0-based), the CGS of the projected subcode, and one full codeword row
/// per CGS generator (tails at later block components in normal form).
struct ModuleBlock {
    size_t component = 0;
    IdealCGS cgs;
    std::vector<Word> rows;  // aligned with (level, generator), zero rows kept
};

struct ModuleCGS {
    std::vector<ModuleBlock> blocks;
    uint64_t log_q_size = 0;
};

/// CGS of the ideal generated by the given algebra elements (index-1 case).
IdealCGS ideal_cgs(const std::vector<AElem>& generators, const AlgebraPtr& spec);

/// Block decomposition and per-block CGS data of a code, including the
/// full rows of the canonical generator matrix.
ModuleCGS compute_module_cgs(const CodeModule& code);

/// Printed canonical generator matrix: the block rows whose leading entry
/// is nonzero in the algebra.
std::vector<Word> canonical_generator_matrix(const CodeModule& code);

/// Exact code size q^exponent.
struct Cardinality {
    uint64_t base = 0;      ///< q = p^d
    uint64_t exponent = 0;  ///< log_q |C|
    std::string decimal() const;
    bool operator==(const Cardinality& o) const = default;
};
Cardinality cardinality(const CodeModule& code);
Cardinality cardinality_from_cgs(const CodeModule& code);

enum class MembershipMethod { cgs, linear };

/// Ideal membership of an element of E (or of the algebra when l = 1).
bool membership(const Word& w, const CodeModule& code,
                MembershipMethod method = MembershipMethod::linear);
/// Membership in an ideal given by its CGS (the layered normal-form chain).
bool cgs_membership(const AElem& f, const IdealCGS& cgs);

}  // namespace afc

#endif

#ifndef AFFINECODES_CODE_HPP
#define AFFINECODES_CODE_HPP

#include <memory>
#include <mutex>

#include "affinecodes/algebra.hpp"
#include "affinecodes/linalg.hpp"

namespace afc {

/// Codeword: an element of E = A^l.
using Word = std::vector<AElem>;

Word word_zero(const AlgebraPtr& spec, size_t l);
bool word_is_zero(const Word& w);
Word word_add(const Word& a, const Word& b);
Word word_sub(const Word& a, const Word& b);
Word word_scale(const Word& a, const AElem& f);
Word word_scale(const Word& a, const RElem& s);
bool word_eq(const Word& a, const Word& b);
std::string word_to_string(const Word& w);

/// Coefficient listing of a word: per component, ascending monomial order.
std::vector<RElem> phi_word(const Word& w);
Word phi_word_inverse(const AlgebraPtr& spec, size_t l, std::span<const RElem> v);

/// Coordinates used for echelon computations: component ascending, monomial
/// order descending, so pivots line up with leading monomials.
struct CoordLayout {
    AlgebraPtr spec;
    size_t l;

    size_t cols() const { return spec->box_size() * l; }
    size_t pos(size_t comp, size_t desc_rank) const {
        return comp * spec->box_size() + desc_rank;
    }
    size_t comp_of(size_t pos) const { return pos / spec->box_size(); }

    RVec to_coords(const Word& w) const;
    Word from_coords(const RVec& v) const;
    RVec elem_coords(const AElem& f) const;  // single component, descending
    AElem elem_from_coords(const RVec& v) const;
};

/// Replace each row g by its n monomial multiples X^m g; the R-span of the
/// result equals the A-span of the input.
std::vector<Word> expand_over_R(const std::vector<Word>& rows);

struct ModuleCGS;

/// An A-submodule of A^l given by generators, with cached canonical forms.
class CodeModule {
public:
    CodeModule(AlgebraPtr spec, size_t l, std::vector<Word> generators);

    const AlgebraPtr& spec() const { return spec_; }
    size_t index() const { return l_; }
    const std::vector<Word>& generators() const { return gens_; }
    CoordLayout layout() const { return CoordLayout{spec_, l_}; }

    const HowellForm& howell() const;
    const ModuleCGS& cgs() const;

    bool contains_word(const Word& w) const;
    bool same_module(const CodeModule& o) const;
    bool is_zero() const;

private:
    AlgebraPtr spec_;
    size_t l_;
    std::vector<Word> gens_;
    mutable std::once_flag howell_once_, cgs_once_;
    mutable std::shared_ptr<const HowellForm> howell_;
    mutable std::shared_ptr<const ModuleCGS> cgs_;
};

}  // namespace afc

#endif

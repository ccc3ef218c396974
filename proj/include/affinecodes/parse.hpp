#ifndef AFFINECODES_PARSE_HPP
#define AFFINECODES_PARSE_HPP

#include <string>

#include "affinecodes/code.hpp"

namespace afc {

/// Parse failure with a 1-based position.
class ParseError : public std::runtime_error {
public:
    ParseError(size_t line, size_t col, const std::string& msg)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
          line_(line), col_(col) {}
    size_t line() const { return line_; }
    size_t col() const { return col_; }

private:
    size_t line_, col_;
};

/// Polynomial expression over the algebra: variables X1..Xr (bare X means
/// X1), `w` for the ring generator when d > 1, nonnegative integer literals,
/// `+`, `-`, `*`, `^`, parentheses, implicit multiplication by juxtaposition.
/// Exponents outside the box reduce through the relations.
AElem parse_poly(const std::string& text, const AlgebraPtr& spec, size_t line_no = 1);

/// Univariate modulus syntax over Z/p^t: variable `X`, integer coefficients.
RPoly parse_modulus_poly(const std::string& text, const RingPtr& zpt, size_t line_no = 1);

/// Split "(a, b, c)" at top-level commas; parentheses must balance.
std::vector<std::string> split_tuple(const std::string& text, size_t line_no = 1);

/// Parsed code specification file.
struct SpecFile {
    RingPtr ring;
    AlgebraPtr algebra;
    size_t index = 1;
    std::vector<Word> generators;

    CodeModule code() const { return CodeModule(algebra, index, generators); }
};

/// Line-oriented grammar:
///   ring Z <p> <t>  |  ring GR <p> <t> <d> [modulus]
///   order <lex|grlex|grevlex> [X1>X2>...]      (optional, default lex)
///   vars <r>
///   rel <poly>                                  (r lines)
///   index <l>
///   gen (<poly>, ..., <poly>)
/// `#` starts a comment; unknown keys are rejected.
SpecFile parse_spec(const std::string& text);

/// Canonical regeneration of a specification file (parse-print-parse is a
/// fixpoint up to semantic equality).
std::string print_spec(const SpecFile& sf);

std::string matrix_to_string(const std::vector<Word>& rows);

}  // namespace afc

#endif

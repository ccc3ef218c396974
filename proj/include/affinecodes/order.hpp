#ifndef AFFINECODES_ORDER_HPP
#define AFFINECODES_ORDER_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace afc {

/// Exponent tuple in N_0^r.
using Exp = std::vector<uint32_t>;

inline bool divides(const Exp& a, const Exp& b) {  // a <= b componentwise
    for (size_t j = 0; j < a.size(); ++j)
        if (a[j] > b[j]) return false;
    return true;
}

inline Exp exp_add(const Exp& a, const Exp& b) {
    Exp c(a.size());
    for (size_t j = 0; j < a.size(); ++j) c[j] = a[j] + b[j];
    return c;
}

inline Exp exp_sub(const Exp& a, const Exp& b) {
    Exp c(a.size());
    for (size_t j = 0; j < a.size(); ++j) c[j] = a[j] - b[j];
    return c;
}

enum class OrderKind { lex, grlex, grevlex };

/// Admissible monomial order on N_0^r with an explicit variable precedence.
/// precedence[0] is the most significant variable (0-based index).
struct MonomialOrder {
    OrderKind kind = OrderKind::lex;
    std::vector<uint32_t> precedence;

    static MonomialOrder standard(OrderKind kind, uint32_t r) {
        MonomialOrder o;
        o.kind = kind;
        o.precedence.resize(r);
        for (uint32_t j = 0; j < r; ++j) o.precedence[j] = j;
        return o;
    }

    /// -1 if a < b, 0 if equal, +1 if a > b.
    int compare(const Exp& a, const Exp& b) const {
        if (kind != OrderKind::lex) {
            uint64_t da = 0, db = 0;
            for (size_t j = 0; j < a.size(); ++j) da += a[j];
            for (size_t j = 0; j < b.size(); ++j) db += b[j];
            if (da != db) return da < db ? -1 : 1;
            if (kind == OrderKind::grevlex) {
                // smaller exponent in the least significant variable wins
                for (size_t i = precedence.size(); i-- > 0;) {
                    uint32_t j = precedence[i];
                    if (a[j] != b[j]) return a[j] > b[j] ? -1 : 1;
                }
                return 0;
            }
        }
        for (uint32_t j : precedence)
            if (a[j] != b[j]) return a[j] < b[j] ? -1 : 1;
        return 0;
    }

    bool less(const Exp& a, const Exp& b) const { return compare(a, b) < 0; }

    std::string name() const {
        switch (kind) {
            case OrderKind::lex: return "lex";
            case OrderKind::grlex: return "grlex";
            case OrderKind::grevlex: return "grevlex";
        }
        return "?";
    }
};

inline OrderKind order_kind_from_name(const std::string& s) {
    if (s == "lex") return OrderKind::lex;
    if (s == "grlex") return OrderKind::grlex;
    if (s == "grevlex") return OrderKind::grevlex;
    throw std::invalid_argument("unknown monomial order: " + s);
}

}  // namespace afc

#endif

#include "affinecodes/families.hpp"

namespace afc {

FamilyResult build_family(const std::string& family, const RingPtr& ring,
                          const std::vector<uint32_t>& lengths, size_t index,
                          const std::optional<RElem>& lambda,
                          const std::optional<RPoly>& poly, const std::string& variant) {
    auto need_lengths = [&](size_t k) {
        if (lengths.size() != k)
            throw std::invalid_argument(family + " expects " + std::to_string(k) + " length(s)");
        for (uint32_t n : lengths)
            if (n < 1) throw std::invalid_argument("lengths must be >= 1");
    };
    auto uni = [&](const RPoly& t1, size_t l) {
        return FamilyResult{
            AlgebraSpec::make(ring, {t1}, MonomialOrder::standard(OrderKind::lex, 1)), l};
    };

    if (family == "cyclic" || family == "quasi_cyclic") {
        need_lengths(1);
        return uni(RPoly::x_pow_minus_one(ring, lengths[0]),
                   family == "cyclic" ? index : std::max<size_t>(index, 2));
    }
    if (family == "negacyclic") {
        need_lengths(1);
        RPoly t1 = RPoly::x_pow_minus_one(ring, lengths[0]) + RPoly::from_ints(ring, {2});
        return uni(t1, index);
    }
    if (family == "constacyclic") {
        need_lengths(1);
        if (!lambda) throw std::invalid_argument("constacyclic needs lambda");
        if (!lambda->is_unit()) throw std::invalid_argument("lambda must be a unit");
        RPoly t1 = RPoly::monomial(ring, lengths[0], ring->one()) +
                   RPoly(ring, {*lambda});
        return uni(t1, index);
    }
    if (family == "polycyclic") {
        if (!poly) throw std::invalid_argument("polycyclic needs a monic relation");
        return uni(*poly, index);
    }
    if (family == "abelian" || family == "quasi_abelian") {
        if (lengths.empty()) throw std::invalid_argument("abelian needs lengths");
        std::vector<RPoly> rels;
        for (uint32_t n : lengths) rels.push_back(RPoly::x_pow_minus_one(ring, n));
        auto spec = AlgebraSpec::make(
            ring, rels, MonomialOrder::standard(OrderKind::lex, static_cast<uint32_t>(rels.size())));
        return FamilyResult{spec, family == "abelian" ? index : std::max<size_t>(index, 2)};
    }
    if (family == "Rk") {
        need_lengths(1);
        uint32_t k = lengths[0];
        RingPtr f2 = ChainRing::make(2, 1, 1);
        std::vector<RPoly> rels;
        for (uint32_t j = 0; j < k; ++j) rels.push_back(RPoly::from_ints(f2, {0, 0, 1}));
        return FamilyResult{
            AlgebraSpec::make(f2, rels, MonomialOrder::standard(OrderKind::lex, k)), index};
    }
    if (family == "nonchain16") {
        if (variant == "f2uv") {
            RingPtr f2 = ChainRing::make(2, 1, 1);
            std::vector<RPoly> rels{RPoly::from_ints(f2, {0, 0, 1}), RPoly::from_ints(f2, {0, 0, 1})};
            return FamilyResult{
                AlgebraSpec::make(f2, rels, MonomialOrder::standard(OrderKind::lex, 2)), index};
        }
        if (variant.empty() || variant == "z4x2") {
            RingPtr z4 = ChainRing::make(2, 2, 1);
            return FamilyResult{AlgebraSpec::make(z4, {RPoly::from_ints(z4, {0, 0, 1})},
                                                  MonomialOrder::standard(OrderKind::lex, 1)),
                                index};
        }
        throw std::invalid_argument("nonchain16 variant must be z4x2 or f2uv");
    }
    throw std::invalid_argument("unknown family: " + family);
}

}  // namespace afc

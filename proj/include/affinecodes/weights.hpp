#ifndef AFFINECODES_WEIGHTS_HPP
#define AFFINECODES_WEIGHTS_HPP

#include <map>

#include "affinecodes/cgs.hpp"

namespace afc {

enum class WeightKind { hamming, lee, euclidean };

WeightKind weight_kind_from_name(const std::string& s);
std::string weight_name(WeightKind w);

/// Weight of a single ring element.  Hamming works over any ring; Lee
/// (0,1,2,1) and Euclidean (0,1,4,1) only over Z4.
uint64_t ring_weight(const RElem& x, WeightKind w);

/// Induced weight: the coefficient listing's coordinatewise sum.
uint64_t induced_weight(const Word& w, WeightKind kind);

/// Exact weight distribution by full enumeration from the canonical
/// echelon form.  Throws std::invalid_argument when |C| exceeds the cap.
struct WeightDistribution {
    std::map<uint64_t, uint64_t> counts;
    uint64_t min_nonzero = 0;  ///< 0 when the code has no nonzero word
};
WeightDistribution weight_enumerator(const CodeModule& code, WeightKind kind,
                                     uint64_t cap = uint64_t(1) << 24);

}  // namespace afc

#endif

#include "affinecodes/weights.hpp"

namespace afc {

WeightKind weight_kind_from_name(const std::string& s) {
    if (s == "hamming") return WeightKind::hamming;
    if (s == "lee") return WeightKind::lee;
    if (s == "euclidean") return WeightKind::euclidean;
    throw std::invalid_argument("unknown weight: " + s);
}

std::string weight_name(WeightKind w) {
    switch (w) {
        case WeightKind::hamming: return "hamming";
        case WeightKind::lee: return "lee";
        case WeightKind::euclidean: return "euclidean";
    }
    return "?";
}

uint64_t ring_weight(const RElem& x, WeightKind w) {
    if (w == WeightKind::hamming) return x.is_zero() ? 0 : 1;
    const auto& ring = *x.ring();
    if (ring.p() != 2 || ring.t() != 2 || ring.d() != 1)
        throw std::invalid_argument("Lee/Euclidean weights are defined over Z4 only");
    static constexpr uint64_t lee[4] = {0, 1, 2, 1};
    static constexpr uint64_t euc[4] = {0, 1, 4, 1};
    return w == WeightKind::lee ? lee[x.coeff(0)] : euc[x.coeff(0)];
}

uint64_t induced_weight(const Word& w, WeightKind kind) {
    uint64_t acc = 0;
    for (const RElem& c : phi_word(w)) acc += ring_weight(c, kind);
    return acc;
}

WeightDistribution weight_enumerator(const CodeModule& code, WeightKind kind, uint64_t cap) {
    const HowellForm& h = code.howell();
    const RingPtr& ring = code.spec()->ring();
    uint64_t logq = h.log_q_size();
    // reject before enumerating: |C| = q^logq
    {
        uint64_t size = 1;
        for (uint64_t i = 0; i < logq; ++i) {
            if (size > cap / ring->q())
                throw std::invalid_argument("code too large for weight enumeration");
            size *= ring->q();
        }
        if (size > cap) throw std::invalid_argument("code too large for weight enumeration");
    }

    // transversal per row: coefficients with coordinates < p^(t - e)
    WeightDistribution dist;
    CoordLayout lay = code.layout();
    std::vector<std::vector<RElem>> choices;
    for (size_t i = 0; i < h.rows.size(); ++i) {
        std::vector<RElem> c;
        uint64_t pe = 1;
        for (uint32_t k = 0; k < ring->t() - h.piv_val[i]; ++k) pe *= ring->p();
        std::vector<uint64_t> digits(ring->d(), 0);
        for (;;) {
            std::vector<int64_t> v(digits.begin(), digits.end());
            c.push_back(ring->from_coeffs(v));
            size_t j = 0;
            while (j < digits.size() && ++digits[j] == pe) digits[j++] = 0;
            if (j == digits.size()) break;
        }
        choices.push_back(std::move(c));
    }

    // depth-first over the transversal with incremental partial sums; the
    // induced weight is the coordinate sum in any listing order
    auto leaf_weight = [&](const RVec& v) {
        uint64_t w = 0;
        for (const RElem& c : v) w += ring_weight(c, kind);
        return w;
    };
    auto walk = [&](auto&& self, size_t depth, const RVec& partial) -> void {
        if (depth == h.rows.size()) {
            ++dist.counts[leaf_weight(partial)];
            return;
        }
        for (const RElem& c : choices[depth]) {
            if (c.is_zero())
                self(self, depth + 1, partial);
            else
                self(self, depth + 1, rvec_add(partial, rvec_scale(h.rows[depth], c)));
        }
    };
    walk(walk, 0, rvec_zero(ring, lay.cols()));

    for (const auto& [w, c] : dist.counts)
        if (w != 0) {
            dist.min_nonzero = w;
            break;
        }
    return dist;
}

}  // namespace afc

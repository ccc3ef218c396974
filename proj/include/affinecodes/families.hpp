#ifndef AFFINECODES_FAMILIES_HPP
#define AFFINECODES_FAMILIES_HPP

#include <optional>

#include "affinecodes/cgs.hpp"
#include "affinecodes/galois_ext.hpp"

namespace afc {

/// Classical code families realized as algebra presentations.
struct FamilyResult {
    AlgebraPtr algebra;
    size_t index = 1;
};

/// cyclic(n): X^n - 1; negacyclic(n): X^n + 1; constacyclic(n, lambda):
/// X^n + lambda with lambda a unit; polycyclic(t1): any monic t1;
/// abelian(n_1..n_r): X_j^{n_j} - 1; quasi_cyclic(n, l), quasi_abelian(n_vec, l);
/// Rk(k): F2[X_1..X_k]/<X_j^2>; nonchain16 ("z4x2" = Z4[X]/<X^2>,
/// "f2uv" = F2[X1,X2]/<X1^2,X2^2>).
FamilyResult build_family(const std::string& family, const RingPtr& ring,
                          const std::vector<uint32_t>& lengths, size_t index,
                          const std::optional<RElem>& lambda = std::nullopt,
                          const std::optional<RPoly>& poly = std::nullopt,
                          const std::string& variant = "");

/// Parameters of the generalized Kerdock presentation over R = GR(4, d),
/// q = 2^d, S = GR(4, dm), tau = q^m - 1.
struct KerdockParams {
    uint32_t d = 1, m = 3;
    RingPtr base;            ///< R
    GaloisExtension ext;     ///< S over R
    AElem theta;             ///< generator of the nonzero Teichmuller set of S
    uint64_t tau = 0;
    std::vector<RElem> eta;  ///< generators of 1 + 2R
    RPoly h;                 ///< minimal polynomial of theta, divides X^tau - 1
    RPoly h_star;            ///< reciprocal of h
    RElem h0;                ///< trailing coefficient of h
    RPoly p_poly;            ///< (X^tau - 1) / ((X - 1) h*)
    AlgebraPtr algebra;      ///< R[X_1..X_r]/<X_1^tau - 1, X_2^2 - 1, ...>
    AElem q_poly;            ///< sum of eta products in X_2..X_r
};

struct KerdockResult {
    KerdockParams params;
    Word generator;  ///< single generator of the index-2 code
};

/// The index-2 presentation: generator
/// (H0 P(X1) Q(X2..Xr), sum_i (H0/H*(1)) X1^i Q(X2..Xr)).
KerdockResult kerdock_generator(uint32_t d, uint32_t m);

/// The defining codeword pair for parameters (xi, b).
Word kerdock_word(const KerdockParams& kp, const AElem& xi, const RElem& b);

}  // namespace afc

#endif

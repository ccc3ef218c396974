#include "affinecodes/families.hpp"

namespace afc {

namespace {

std::vector<AElem> all_extension_elements(const GaloisExtension& ext) {
    const AlgebraPtr& s = ext.s;
    const RingPtr& r = ext.base;
    std::vector<RElem> scalars = r->all_elements();
    std::vector<AElem> out;
    std::vector<size_t> idx(s->box_size(), 0);
    for (;;) {
        AElem x(s);
        for (size_t i = 0; i < s->box_size(); ++i) x.set_coeff(i, scalars[idx[i]]);
        out.push_back(std::move(x));
        size_t j = 0;
        while (j < idx.size() && ++idx[j] == scalars.size()) idx[j++] = 0;
        if (j == idx.size()) break;
    }
    return out;
}

}  // namespace

Word kerdock_word(const KerdockParams& kp, const AElem& xi, const RElem& b) {
    const AlgebraPtr& spec = kp.algebra;
    uint32_t r = spec->num_vars();
    AElem f(spec), g(spec);
    // Teichmuller powers of theta, cycled over i1
    AElem pw = kp.ext.s->one();
    for (uint64_t i1 = 0; i1 < kp.tau; ++i1) {
        RElem tr = kp.ext.trace(xi * pw);
        RElem coeff_f = tr + b;
        // eta products over the boolean exponents of X_2..X_r
        for (uint32_t mask = 0; mask < (1u << (r - 1)); ++mask) {
            RElem etas = spec->ring()->one();
            Exp e(r, 0);
            e[0] = static_cast<uint32_t>(i1);
            for (uint32_t j = 0; j + 1 < r; ++j)
                if (mask & (1u << j)) {
                    etas = etas * kp.eta[j];
                    e[j + 1] = 1;
                }
            f.set_coeff(e, f.coeff(e) + coeff_f * etas);
            g.set_coeff(e, g.coeff(e) + b * etas);
        }
        pw = pw * kp.theta;
    }
    return Word{f, g};
}

KerdockResult kerdock_generator(uint32_t d, uint32_t m) {
    if (m < 3 || m % 2 == 0) throw std::invalid_argument("m must be odd and >= 3");
    if (d != 1 || m > 5)
        throw std::invalid_argument("parameters exceed the desk-scale budget (d = 1, m <= 5)");

    KerdockParams kp;
    kp.d = d;
    kp.m = m;
    kp.base = ChainRing::make(2, 2, d);
    const RingPtr& r = kp.base;
    kp.ext = make_extension(r, m);
    kp.tau = kp.ext.residue_size() - 1;

    // generator of the nonzero Teichmuller set: first element (deterministic
    // enumeration) of full multiplicative order
    {
        std::vector<AElem> cands;
        AElem y = kp.ext.gen();
        cands.push_back(kp.ext.teichmuller(y));
        for (const AElem& x : all_extension_elements(kp.ext)) cands.push_back(kp.ext.teichmuller(x));
        bool found = false;
        for (const AElem& c : cands) {
            if (c.is_zero()) continue;
            if (kp.ext.teichmuller_order(c) == kp.tau) {
                kp.theta = c;
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("no Teichmuller generator found");
    }

    kp.h = kp.ext.minimal_polynomial(kp.theta);
    {
        auto [q, rem] = RPoly::x_pow_minus_one(r, kp.tau).divmod(kp.h);
        if (!rem.is_zero()) throw std::logic_error("minimal polynomial does not divide X^tau - 1");
    }
    kp.h_star = kp.h.reciprocal();
    kp.h0 = kp.h.coeff(0);

    // P = (X^tau - 1) / ((X - 1) H*)
    {
        RPoly denom = RPoly::from_ints(r, {-1, 1}) * kp.h_star;
        auto [q, rem] = RPoly::x_pow_minus_one(r, kp.tau).divmod(denom);
        if (!rem.is_zero()) throw std::logic_error("(X - 1) H* does not divide X^tau - 1");
        kp.p_poly = q;
    }

    // eta_i = 1 + 2 w^(i-1) generate the direct factors of 1 + 2R
    for (uint32_t i = 0; i < d; ++i) {
        RElem w = d == 1 ? r->one() : r->gen().pow(i);
        kp.eta.push_back(r->one() + w.shift_up(1));
    }

    uint32_t vars = d + 1;
    std::vector<RPoly> rels{RPoly::x_pow_minus_one(r, kp.tau)};
    for (uint32_t j = 1; j < vars; ++j) rels.push_back(RPoly::x_pow_minus_one(r, 2));
    kp.algebra = AlgebraSpec::make(r, rels, MonomialOrder::standard(OrderKind::lex, vars));

    // Q = sum of eta products over X_2..X_r
    AElem qp(kp.algebra);
    for (uint32_t mask = 0; mask < (1u << (vars - 1)); ++mask) {
        RElem etas = r->one();
        Exp e(vars, 0);
        for (uint32_t j = 0; j + 1 < vars; ++j)
            if (mask & (1u << j)) {
                etas = etas * kp.eta[j];
                e[j + 1] = 1;
            }
        qp.set_coeff(e, qp.coeff(e) + etas);
    }
    kp.q_poly = qp;

    // generator row
    RElem hstar_at_1 = kp.h_star.eval(r->one());
    if (!hstar_at_1.is_unit()) throw std::logic_error("H*(1) is not a unit");
    RElem c2 = kp.h0 * hstar_at_1.inv();

    AElem p_of_x1(kp.algebra);
    for (int64_t k = 0; k <= kp.p_poly.degree(); ++k) {
        Exp e(vars, 0);
        e[0] = static_cast<uint32_t>(k);
        p_of_x1.set_coeff(e, kp.p_poly.coeff(k));
    }
    AElem ones_x1(kp.algebra);
    for (uint64_t k = 0; k < kp.tau; ++k) {
        Exp e(vars, 0);
        e[0] = static_cast<uint32_t>(k);
        ones_x1.set_coeff(e, r->one());
    }

    AElem first = p_of_x1 * qp * kp.h0;
    AElem second = ones_x1 * qp * c2;

    KerdockResult res;
    res.params = std::move(kp);
    res.generator = Word{first, second};
    return res;
}

}  // namespace afc

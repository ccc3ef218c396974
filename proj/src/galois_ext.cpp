#include "affinecodes/galois_ext.hpp"

namespace afc {

namespace {

AElem apow(const AElem& x, uint64_t e) {
    AElem acc = x.spec()->one(), b = x;
    while (e) {
        if (e & 1) acc = acc * b;
        b = b * b;
        e >>= 1;
    }
    return acc;
}

}  // namespace

uint64_t GaloisExtension::residue_size() const {
    uint64_t r = 1;
    for (uint32_t i = 0; i < m; ++i) r *= base->q();
    return r;
}

AElem GaloisExtension::from_base(const RElem& r) const { return s->from_scalar(r); }

AElem GaloisExtension::gen() const { return s->monomial(Exp{1}); }

AElem GaloisExtension::teichmuller(const AElem& xi) const {
    AElem g = xi;
    uint64_t big_q = residue_size();
    for (uint32_t i = 0; i + 1 < base->t(); ++i) g = apow(g, big_q);
    return g;
}

std::vector<AElem> GaloisExtension::teichmuller_digits(const AElem& xi) const {
    std::vector<AElem> digits;
    AElem x = xi;
    for (uint32_t i = 0; i < base->t(); ++i) {
        AElem g = teichmuller(x);
        digits.push_back(g);
        x = (x - g).shift_down(1);
    }
    return digits;
}

AElem GaloisExtension::frobenius(const AElem& xi) const {
    auto digits = teichmuller_digits(xi);
    AElem acc = s->zero();
    for (uint32_t i = 0; i < digits.size(); ++i)
        acc += apow(digits[i], base->q()).shift_up(i);
    return acc;
}

RElem GaloisExtension::trace(const AElem& xi) const {
    AElem acc = xi, conj = xi;
    for (uint32_t j = 1; j < m; ++j) {
        conj = frobenius(conj);
        acc += conj;
    }
    for (size_t i = 1; i < s->box_size(); ++i)
        if (!acc.coeff(i).is_zero()) throw std::logic_error("trace is not in the base ring");
    return acc.coeff(size_t{0});
}

RPoly GaloisExtension::minimal_polynomial(const AElem& theta) const {
    // product of (Y - theta^(q^j)) over the orbit, expanded in S[Y]
    std::vector<AElem> poly{-theta, s->one()};
    AElem conj = theta;
    for (uint32_t j = 1; j < m; ++j) {
        conj = frobenius(conj);
        std::vector<AElem> next(poly.size() + 1, s->zero());
        for (size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] += poly[i];
            next[i] -= poly[i] * conj;
        }
        poly = std::move(next);
    }
    std::vector<RElem> coeffs;
    for (const auto& c : poly) {
        for (size_t i = 1; i < s->box_size(); ++i)
            if (!c.coeff(i).is_zero())
                throw std::logic_error("orbit product has a non-constant coefficient");
        coeffs.push_back(c.coeff(size_t{0}));
    }
    return RPoly(base, std::move(coeffs));
}

uint64_t GaloisExtension::teichmuller_order(const AElem& theta) const {
    if (theta.is_zero()) throw std::domain_error("order of zero");
    AElem acc = theta;
    uint64_t ord = 1;
    uint64_t limit = residue_size();
    while (!(acc == s->one())) {
        acc = acc * theta;
        if (++ord > limit) throw std::logic_error("element is not a unit of finite TCS order");
    }
    return ord;
}

GaloisExtension make_extension(RingPtr base, uint32_t m, const RPoly& ext_modulus) {
    if (m < 1) throw std::invalid_argument("extension degree must be >= 1");
    if (ext_modulus.degree() != static_cast<int64_t>(m) || !ext_modulus.is_monic())
        throw std::invalid_argument("extension modulus must be monic of degree m");
    if (!is_irreducible_mod_p(ext_modulus))
        throw std::invalid_argument("extension modulus is reducible mod p");
    GaloisExtension ext;
    ext.base = base;
    ext.m = m;
    ext.s = AlgebraSpec::make(base, {ext_modulus}, MonomialOrder::standard(OrderKind::lex, 1));
    return ext;
}

GaloisExtension make_extension(RingPtr base, uint32_t m) {
    if (base->d() != 1)
        throw std::invalid_argument("default extension modulus needs a prime-subring base");
    RPoly irr = first_irreducible(base, m);
    uint64_t order = 1;
    for (uint32_t i = 0; i < m; ++i) order *= base->q();
    RPoly lifted = base->t() == 1 ? irr : hensel_lift_factor(irr, order - 1, base);
    return make_extension(base, m, lifted);
}

}  // namespace afc

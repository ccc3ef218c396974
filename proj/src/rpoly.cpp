#include "affinecodes/rpoly.hpp"

#include <numeric>
#include <sstream>

namespace afc {

RPoly::RPoly(RingPtr ring, std::vector<RElem> coeffs)
    : ring_(std::move(ring)), c_(std::move(coeffs)) {
    trim();
}

RPoly RPoly::from_ints(const RingPtr& ring, const std::vector<int64_t>& coeffs) {
    std::vector<RElem> c;
    c.reserve(coeffs.size());
    for (int64_t v : coeffs) c.push_back(ring->from_int(v));
    return RPoly(ring, std::move(c));
}

RPoly RPoly::monomial(const RingPtr& ring, size_t degree, const RElem& c) {
    std::vector<RElem> cs(degree + 1, ring->zero());
    cs[degree] = c;
    return RPoly(ring, std::move(cs));
}

RPoly RPoly::x_pow_minus_one(const RingPtr& ring, size_t n) {
    std::vector<RElem> cs(n + 1, ring->zero());
    cs[0] = -ring->one();
    cs[n] = ring->one();
    return RPoly(ring, std::move(cs));
}

void RPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

RElem RPoly::coeff(size_t i) const {
    return i < c_.size() ? c_[i] : ring_->zero();
}

RElem RPoly::leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of 0");
    return c_.back();
}

bool RPoly::is_monic() const { return !is_zero() && c_.back().is_one(); }

RPoly RPoly::operator+(const RPoly& o) const {
    std::vector<RElem> c(std::max(c_.size(), o.c_.size()), ring_->zero());
    for (size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) + o.coeff(i);
    return RPoly(ring_, std::move(c));
}

RPoly RPoly::operator-(const RPoly& o) const {
    std::vector<RElem> c(std::max(c_.size(), o.c_.size()), ring_->zero());
    for (size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) - o.coeff(i);
    return RPoly(ring_, std::move(c));
}

RPoly RPoly::operator-() const {
    std::vector<RElem> c;
    c.reserve(c_.size());
    for (const auto& x : c_) c.push_back(-x);
    return RPoly(ring_, std::move(c));
}

RPoly RPoly::operator*(const RPoly& o) const {
    if (is_zero() || o.is_zero()) return RPoly(ring_);
    std::vector<RElem> c(c_.size() + o.c_.size() - 1, ring_->zero());
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    }
    return RPoly(ring_, std::move(c));
}

RPoly RPoly::operator*(const RElem& s) const {
    std::vector<RElem> c;
    c.reserve(c_.size());
    for (const auto& x : c_) c.push_back(x * s);
    return RPoly(ring_, std::move(c));
}

bool RPoly::operator==(const RPoly& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

std::pair<RPoly, RPoly> RPoly::divmod(const RPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
    RElem lead_inv = divisor.leading().inv();
    std::vector<RElem> rem(c_);
    int64_t dd = divisor.degree();
    if (degree() < dd) return {RPoly(ring_), *this};
    std::vector<RElem> quo(degree() - dd + 1, ring_->zero());
    for (int64_t k = degree(); k >= dd; --k) {
        RElem f = rem[k] * lead_inv;
        if (f.is_zero()) continue;
        quo[k - dd] = f;
        for (int64_t i = 0; i <= dd; ++i)
            rem[k - dd + i] -= f * divisor.c_[i];
    }
    return {RPoly(ring_, std::move(quo)), RPoly(ring_, std::move(rem))};
}

RElem RPoly::eval(const RElem& x) const {
    RElem acc = ring_->zero();
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

RPoly RPoly::residue() const {
    std::vector<RElem> c;
    c.reserve(c_.size());
    for (const auto& x : c_) c.push_back(x.residue());
    return RPoly(ring_, std::move(c));
}

RPoly RPoly::shift_up(uint32_t k) const {
    std::vector<RElem> c;
    c.reserve(c_.size());
    for (const auto& x : c_) c.push_back(x.shift_up(k));
    return RPoly(ring_, std::move(c));
}

RPoly RPoly::shift_down(uint32_t k) const {
    std::vector<RElem> c;
    c.reserve(c_.size());
    for (const auto& x : c_) c.push_back(x.shift_down(k));
    return RPoly(ring_, std::move(c));
}

RPoly RPoly::reciprocal() const {
    std::vector<RElem> c(c_.rbegin(), c_.rend());
    return RPoly(ring_, std::move(c));
}

std::string RPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!first) os << "+";
        first = false;
        bool scalar_one = c_[i].is_one();
        std::string cs = c_[i].to_string();
        bool needs_parens = cs.find('+') != std::string::npos;
        if (i == 0) {
            os << (needs_parens ? "(" + cs + ")" : cs);
            continue;
        }
        if (!scalar_one) os << (needs_parens ? "(" + cs + ")" : cs) << "*";
        os << var;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

// ---- residue-field helpers -------------------------------------------------

RPoly fq_mul(const RPoly& a, const RPoly& b) { return (a * b).residue(); }

std::pair<RPoly, RPoly> fq_divmod(const RPoly& a, const RPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    const RingPtr& ring = a.ring();
    RElem lead_inv = b.leading().residue().pow(ring->q() - 2).residue();
    std::vector<RElem> rem(a.coeffs());
    int64_t dd = b.degree();
    if (a.degree() < dd) return {RPoly(ring), a};
    std::vector<RElem> quo(a.degree() - dd + 1, ring->zero());
    for (int64_t k = a.degree(); k >= dd; --k) {
        RElem f = (rem[k] * lead_inv).residue();
        if (f.is_zero()) continue;
        quo[k - dd] = f;
        for (int64_t i = 0; i <= dd; ++i)
            rem[k - dd + i] = (rem[k - dd + i] - f * b.coeff(i)).residue();
    }
    return {RPoly(ring, std::move(quo)), RPoly(ring, std::move(rem))};
}

RPoly fq_gcd(RPoly a, RPoly b) {
    a = a.residue();
    b = b.residue();
    while (!b.is_zero()) {
        auto [q, r] = fq_divmod(a, b);
        a = b;
        b = r;
    }
    if (a.is_zero()) return a;
    RElem inv = a.leading().pow(a.ring()->q() - 2).residue();
    return (a * inv).residue();
}

FqEuclid fq_ext_euclid(const RPoly& a0, const RPoly& b0) {
    const RingPtr& ring = a0.ring();
    RPoly a = a0.residue(), b = b0.residue();
    RPoly s0 = RPoly::from_ints(ring, {1}), s1(ring);
    RPoly t0(ring), t1 = RPoly::from_ints(ring, {1});
    while (!b.is_zero()) {
        auto [q, r] = fq_divmod(a, b);
        a = b;
        b = r;
        RPoly s2 = (s0 - q * s1).residue();
        s0 = s1;
        s1 = s2;
        RPoly t2 = (t0 - q * t1).residue();
        t0 = t1;
        t1 = t2;
    }
    if (a.is_zero()) return {a, s0, t0};
    RElem inv = a.leading().pow(ring->q() - 2).residue();
    return {(a * inv).residue(), (s0 * inv).residue(), (t0 * inv).residue()};
}

RPoly fq_pow_mod(const RPoly& base, uint64_t e, const RPoly& mod) {
    RPoly acc = RPoly::from_ints(base.ring(), {1});
    RPoly b = fq_divmod(base.residue(), mod).second;
    while (e) {
        if (e & 1) acc = fq_divmod(fq_mul(acc, b), mod).second;
        b = fq_divmod(fq_mul(b, b), mod).second;
        e >>= 1;
    }
    return acc;
}

bool is_irreducible_mod_p(const RPoly& f0) {
    RPoly f = f0.residue();
    const RingPtr& ring = f.ring();
    if (f.degree() < 1) return false;
    if (f.degree() == 1) return true;
    uint64_t m = static_cast<uint64_t>(f.degree());
    uint64_t q = ring->q();
    RPoly x = RPoly::from_ints(ring, {0, 1});
    // X^(q^k) mod f via k successive q-th powers
    auto frob_pow = [&](uint64_t k) {
        RPoly acc = fq_divmod(x, f).second;
        for (uint64_t i = 0; i < k; ++i) acc = fq_pow_mod(acc, q, f);
        return acc;
    };
    if (frob_pow(m) != fq_divmod(x, f).second) return false;
    uint64_t rest = m;
    for (uint64_t ell = 2; ell * ell <= rest; ++ell) {
        if (m % ell) continue;
        while (rest % ell == 0) rest /= ell;
        RPoly g = fq_gcd(frob_pow(m / ell) - x, f);
        if (g.degree() != 0) return false;
    }
    if (rest > 1 && rest < m) {
        RPoly g = fq_gcd(frob_pow(m / rest) - x, f);
        if (g.degree() != 0) return false;
    }
    return true;
}

RPoly hensel_lift_factor(const RPoly& fbar0, uint64_t N, const RingPtr& ring) {
    if (N == 0 || N % ring->p() == 0)
        throw std::invalid_argument("N must be coprime to p");
    RPoly fbar = fbar0.residue();
    if (fbar.is_zero() || !fbar.residue().leading().is_one())
        throw std::invalid_argument("factor must be monic over the residue field");
    RPoly m = RPoly::x_pow_minus_one(ring, N);
    auto [gbar, rem] = fq_divmod(m.residue(), fbar);
    if (!rem.is_zero())
        throw std::invalid_argument("polynomial does not divide X^N - 1 over the residue field");
    FqEuclid eu = fq_ext_euclid(fbar, gbar);
    if (eu.g.degree() != 0)
        throw std::logic_error("X^N - 1 is not squarefree over the residue field");
    // scale Bezout pair so that s*fbar + t*gbar = 1 exactly
    RElem ginv = eu.g.coeff(0).pow(ring->q() - 2).residue();
    RPoly sbar = (eu.s * ginv).residue(), tbar = (eu.t * ginv).residue();

    RPoly f = fbar, g = gbar;
    for (uint32_t k = 1; k < ring->t(); ++k) {
        RPoly ebar = (m - f * g).shift_down(k).residue();
        if (ebar.is_zero()) continue;
        auto [u, df] = fq_divmod(fq_mul(tbar, ebar), fbar);
        RPoly dg = (fq_mul(sbar, ebar) + fq_mul(gbar, u)).residue();
        f = f + df.shift_up(k);
        g = g + dg.shift_up(k);
    }
    if (f * g != m) throw std::logic_error("Hensel lifting failed");
    return f;
}

RPoly first_irreducible(const RingPtr& ring, uint32_t degree) {
    if (ring->d() != 1)
        throw std::invalid_argument("irreducible search runs over the prime subring");
    uint64_t p = ring->p();
    uint64_t count = 1;
    for (uint32_t i = 0; i < degree; ++i) count *= p;
    for (uint64_t code = 0; code < count; ++code) {
        // code encodes (c_{d-1},...,c_1,c_0) base p, c_0 least significant
        std::vector<int64_t> c(degree + 1, 0);
        uint64_t v = code;
        for (uint32_t i = 0; i < degree; ++i) {
            c[i] = static_cast<int64_t>(v % p);
            v /= p;
        }
        c[degree] = 1;
        RPoly f = RPoly::from_ints(ring, c);
        if (is_irreducible_mod_p(f)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");
}

}  // namespace afc

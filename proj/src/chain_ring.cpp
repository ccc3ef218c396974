#include "affinecodes/chain_ring.hpp"

#include <algorithm>
#include <sstream>

#include "affinecodes/rpoly.hpp"

namespace afc {

namespace {

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

uint64_t pow_u64_checked(uint64_t b, uint32_t e, const char* what) {
    uint64_t r = 1;
    for (uint32_t i = 0; i < e; ++i) {
        if (r > (uint64_t(1) << 40) / b)
            throw std::invalid_argument(std::string(what) + " too large (exceeds 2^40)");
        r *= b;
    }
    return r;
}

}  // namespace

ChainRing::ChainRing(uint64_t p, uint32_t t, uint32_t d, std::vector<uint64_t> modulus)
    : p_(p), t_(t), d_(d), modulus_(std::move(modulus)) {
    pt_ = pow_u64_checked(p, t, "p^t");
    q_ = pow_u64_checked(p, d, "p^d");
    // x^d .. x^(2d-2) reduced by the modulus, for products in the power basis
    pow_table_.clear();
    if (d_ > 1) {
        std::vector<uint64_t> cur(d_, 0);  // will hold x^k as d coordinates
        // x^d = -(c_0 + c_1 x + ... + c_{d-1} x^{d-1})
        for (uint32_t i = 0; i < d_; ++i) cur[i] = (pt_ - modulus_[i] % pt_) % pt_;
        pow_table_.push_back(cur);
        for (uint32_t k = d_ + 1; k <= 2 * d_ - 2; ++k) {
            std::vector<uint64_t> nxt(d_, 0);
            // multiply cur by x
            uint64_t top = cur[d_ - 1];
            for (uint32_t i = d_ - 1; i > 0; --i) nxt[i] = cur[i - 1];
            nxt[0] = 0;
            if (top != 0)
                for (uint32_t i = 0; i < d_; ++i)
                    nxt[i] = (nxt[i] + top % pt_ * pow_table_[0][i]) % pt_;
            cur = nxt;
            pow_table_.push_back(cur);
        }
    }
}

RingPtr ChainRing::make(uint64_t p, uint32_t t, uint32_t d) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (t < 1 || d < 1) throw std::invalid_argument("t and d must be >= 1");
    if (d == 1) {
        // Z/p^t as R[X]/<X>
        std::vector<uint64_t> mod = {0, 1};
        return RingPtr(new ChainRing(p, t, 1, std::move(mod)));
    }
    RingPtr zp = make(p, t, 1);
    RPoly irr = first_irreducible(zp, d);
    RPoly lifted = t == 1 ? irr : hensel_lift_factor(irr, pow_u64_checked(p, d, "p^d") - 1, zp);
    std::vector<int64_t> coeffs;
    for (uint32_t i = 0; i <= d; ++i)
        coeffs.push_back(static_cast<int64_t>(lifted.coeff(i).coeff(0)));
    return make(p, t, d, coeffs);
}

RingPtr ChainRing::make(uint64_t p, uint32_t t, uint32_t d,
                        const std::vector<int64_t>& modulus) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (t < 1 || d < 1) throw std::invalid_argument("t and d must be >= 1");
    uint64_t pt = pow_u64_checked(p, t, "p^t");
    if (modulus.size() != d + 1)
        throw std::invalid_argument("modulus must have degree d");
    std::vector<uint64_t> mod(d + 1);
    for (uint32_t i = 0; i <= d; ++i) {
        int64_t v = modulus[i] % static_cast<int64_t>(pt);
        if (v < 0) v += static_cast<int64_t>(pt);
        mod[i] = static_cast<uint64_t>(v);
    }
    if (mod[d] != 1) throw std::invalid_argument("modulus must be monic");
    RingPtr ring(new ChainRing(p, t, d, std::move(mod)));
    if (d > 1) {
        RingPtr zp = make(p, t, 1);
        std::vector<RElem> cs;
        for (uint32_t i = 0; i <= d; ++i)
            cs.push_back(zp->from_int(static_cast<int64_t>(ring->modulus()[i])));
        if (!is_irreducible_mod_p(RPoly(zp, std::move(cs))))
            throw std::invalid_argument("modulus is reducible mod p");
    }
    return ring;
}

RElem ChainRing::zero() const {
    return RElem(shared_from_this(), std::vector<uint64_t>(d_, 0));
}

RElem ChainRing::one() const { return from_int(1); }

RElem ChainRing::from_int(int64_t v) const {
    std::vector<uint64_t> c(d_, 0);
    int64_t r = v % static_cast<int64_t>(pt_);
    if (r < 0) r += static_cast<int64_t>(pt_);
    c[0] = static_cast<uint64_t>(r);
    return RElem(shared_from_this(), std::move(c));
}

RElem ChainRing::from_coeffs(const std::vector<int64_t>& cs) const {
    if (cs.size() > d_) throw std::invalid_argument("too many coordinates");
    std::vector<uint64_t> c(d_, 0);
    for (size_t i = 0; i < cs.size(); ++i) {
        int64_t r = cs[i] % static_cast<int64_t>(pt_);
        if (r < 0) r += static_cast<int64_t>(pt_);
        c[i] = static_cast<uint64_t>(r);
    }
    return RElem(shared_from_this(), std::move(c));
}

RElem ChainRing::gen() const {
    std::vector<uint64_t> c(d_, 0);
    if (d_ > 1)
        c[1] = 1;
    else
        c[0] = modulus_[0] == 0 ? 0 : pt_ - modulus_[0];  // class of X for degree-1 modulus
    return RElem(shared_from_this(), std::move(c));
}

std::vector<RElem> ChainRing::all_elements() const {
    std::vector<RElem> out;
    std::vector<uint64_t> c(d_, 0);
    while (true) {
        out.push_back(RElem(shared_from_this(), c));
        uint32_t i = 0;
        while (i < d_ && ++c[i] == pt_) c[i++] = 0;
        if (i == d_) break;
    }
    return out;
}

bool ChainRing::same_as(const ChainRing& other) const {
    return p_ == other.p_ && t_ == other.t_ && d_ == other.d_ && modulus_ == other.modulus_;
}

std::string ChainRing::describe() const {
    std::ostringstream os;
    if (d_ == 1) {
        if (t_ == 1)
            os << "F" << p_;
        else
            os << "Z" << pt_;
    } else {
        os << "GR(" << pt_ << "," << d_ << ")";
    }
    return os.str();
}

// ---- RElem ----------------------------------------------------------------

RElem::RElem(RingPtr ring, std::vector<uint64_t> coeffs)
    : ring_(std::move(ring)), c_(std::move(coeffs)) {
    if (c_.size() != ring_->d()) throw std::invalid_argument("bad coordinate count");
    for (auto& x : c_) x %= ring_->pt();
}

void RElem::check_same(const RElem& o) const {
    if (!ring_ || !o.ring_ || !ring_->same_as(*o.ring_))
        throw std::invalid_argument("operands from different rings");
}

bool RElem::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](uint64_t x) { return x == 0; });
}

bool RElem::is_one() const {
    if (c_[0] != 1) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

uint32_t RElem::val() const {
    uint32_t best = ring_->t();
    for (uint64_t x : c_) {
        if (x == 0) continue;
        uint32_t v = 0;
        while (x % ring_->p() == 0) {
            x /= ring_->p();
            ++v;
        }
        best = std::min(best, v);
        if (best == 0) break;
    }
    return best;
}

RElem RElem::unit_part() const {
    return shift_down(val());
}

RElem RElem::operator+(const RElem& o) const {
    check_same(o);
    std::vector<uint64_t> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = (c_[i] + o.c_[i]) % ring_->pt();
    return RElem(ring_, std::move(c));
}

RElem RElem::operator-(const RElem& o) const {
    check_same(o);
    std::vector<uint64_t> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i)
        c[i] = (c_[i] + ring_->pt() - o.c_[i]) % ring_->pt();
    return RElem(ring_, std::move(c));
}

RElem RElem::operator-() const {
    std::vector<uint64_t> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = (ring_->pt() - c_[i]) % ring_->pt();
    return RElem(ring_, std::move(c));
}

RElem RElem::operator*(const RElem& o) const {
    check_same(o);
    const uint32_t d = ring_->d();
    const uint64_t pt = ring_->pt();
    if (d == 1) {
        std::vector<uint64_t> c{c_[0] * o.c_[0] % pt};
        return RElem(ring_, std::move(c));
    }
    std::vector<uint64_t> prod(2 * d - 1, 0);
    for (uint32_t i = 0; i < d; ++i) {
        if (c_[i] == 0) continue;
        for (uint32_t j = 0; j < d; ++j)
            prod[i + j] = (prod[i + j] + c_[i] * o.c_[j]) % pt;
    }
    std::vector<uint64_t> c(prod.begin(), prod.begin() + d);
    const auto& tbl = ring_->power_table();
    for (uint32_t k = d; k <= 2 * d - 2; ++k) {
        if (prod[k] == 0) continue;
        const auto& red = tbl[k - d];
        for (uint32_t i = 0; i < d; ++i) c[i] = (c[i] + prod[k] * red[i]) % pt;
    }
    return RElem(ring_, std::move(c));
}

bool RElem::operator==(const RElem& o) const {
    check_same(o);
    return c_ == o.c_;
}

RElem RElem::pow(uint64_t e) const {
    RElem base = *this, acc = ring_->one();
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

RElem RElem::inv() const {
    if (val() != 0) throw std::domain_error("inverse of a non-unit");
    // inverse in the residue field, then Newton lifting to mod p^t
    RElem y = residue().pow(ring_->q() - 2).residue();
    RElem two = ring_->from_int(2);
    for (uint32_t i = 0; i < 8; ++i) {
        RElem e = *this * y;
        if (e.is_one()) return y;
        y = y * (two - e);
    }
    throw std::logic_error("unit inversion failed to converge");
}

RElem RElem::reduce_mod_pk(uint32_t k) const {
    uint64_t pk = 1;
    for (uint32_t i = 0; i < std::min(k, ring_->t()); ++i) pk *= ring_->p();
    std::vector<uint64_t> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] % pk;
    return RElem(ring_, std::move(c));
}

RElem RElem::shift_down(uint32_t k) const {
    uint64_t pk = 1;
    for (uint32_t i = 0; i < k; ++i) pk *= ring_->p();
    std::vector<uint64_t> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] / pk;
    return RElem(ring_, std::move(c));
}

RElem RElem::shift_up(uint32_t k) const {
    uint64_t pk = 1;
    for (uint32_t i = 0; i < k && pk < ring_->pt(); ++i) pk *= ring_->p();
    std::vector<uint64_t> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * (pk % ring_->pt()) % ring_->pt();
    return RElem(ring_, std::move(c));
}

RElem RElem::residue() const {
    std::vector<uint64_t> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] % ring_->p();
    return RElem(ring_, std::move(c));
}

RElem RElem::teichmuller() const {
    RElem g = *this;
    for (uint32_t i = 0; i + 1 < ring_->t(); ++i) g = g.pow(ring_->q());
    return g;
}

std::vector<RElem> RElem::teichmuller_digits() const {
    std::vector<RElem> digits;
    RElem x = *this;
    for (uint32_t i = 0; i < ring_->t(); ++i) {
        RElem g = x.teichmuller();
        digits.push_back(g);
        x = (x - g).shift_down(1);
    }
    return digits;
}

std::string RElem::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0) {
            os << c_[i];
        } else {
            if (c_[i] != 1) os << c_[i] << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::pair<uint32_t, std::optional<RElem>> unit_decompose(const RElem& x) {
    if (x.is_zero()) return {x.ring()->t(), std::nullopt};
    uint32_t v = x.val();
    return {v, x.shift_down(v)};
}

}  // namespace afc

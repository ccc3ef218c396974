#include "affinecodes/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace afc {

AlgebraSpec::AlgebraSpec(RingPtr ring, std::vector<RPoly> relations, MonomialOrder order)
    : ring_(std::move(ring)), r_(static_cast<uint32_t>(relations.size())),
      relations_(std::move(relations)), order_(std::move(order)) {
    dims_.resize(r_);
    n_ = 1;
    for (uint32_t j = 0; j < r_; ++j) {
        dims_[j] = static_cast<uint32_t>(relations_[j].degree());
        if (n_ > (uint64_t(1) << 24) / dims_[j])
            throw std::invalid_argument("box too large");
        n_ *= dims_[j];
    }
    box_exps_.resize(n_);
    for (size_t idx = 0; idx < n_; ++idx) {
        Exp e(r_);
        size_t v = idx;
        for (uint32_t j = r_; j-- > 0;) {
            e[j] = static_cast<uint32_t>(v % dims_[j]);
            v /= dims_[j];
        }
        box_exps_[idx] = std::move(e);
    }
    sorted_asc_.resize(n_);
    for (size_t i = 0; i < n_; ++i) sorted_asc_[i] = i;
    std::sort(sorted_asc_.begin(), sorted_asc_.end(), [&](size_t a, size_t b) {
        return order_.less(box_exps_[a], box_exps_[b]);
    });
    asc_rank_.resize(n_);
    for (size_t i = 0; i < n_; ++i) asc_rank_[sorted_asc_[i]] = i;
    // univariate reduction tables
    upow_.resize(r_);
    for (uint32_t j = 0; j < r_; ++j) {
        uint32_t nj = dims_[j];
        upow_[j].resize(2 * nj - 1);
        for (uint32_t k = 0; k < nj; ++k) {
            std::vector<RElem> v(nj, ring_->zero());
            v[k] = ring_->one();
            upow_[j][k] = std::move(v);
        }
        for (uint32_t k = nj; k <= 2 * nj - 2; ++k) {
            // X_j^k = X_j * X_j^(k-1) reduced by t_j
            const auto& prev = upow_[j][k - 1];
            std::vector<RElem> v(nj, ring_->zero());
            for (uint32_t i = 0; i + 1 < nj; ++i) v[i + 1] = prev[i];
            RElem top = prev[nj - 1];
            if (!top.is_zero()) {
                // X_j^nj = -(t_j - X_j^nj)
                for (uint32_t i = 0; i < nj; ++i)
                    v[i] += top * (-relations_[j].coeff(i));
            }
            upow_[j][k] = std::move(v);
        }
    }
}

AlgebraPtr AlgebraSpec::make(RingPtr ring, std::vector<RPoly> relations, MonomialOrder order) {
    if (relations.empty()) throw std::invalid_argument("at least one relation required");
    for (const auto& t : relations) {
        if (t.is_zero() || t.degree() < 1 || !t.is_monic())
            throw std::invalid_argument("relations must be monic of degree >= 1");
        if (!t.ring()->same_as(*ring))
            throw std::invalid_argument("relation over the wrong ring");
    }
    if (order.precedence.size() != relations.size())
        throw std::invalid_argument("order precedence arity mismatch");
    {
        std::vector<bool> seen(relations.size(), false);
        for (uint32_t j : order.precedence) {
            if (j >= relations.size() || seen[j])
                throw std::invalid_argument("order precedence is not a permutation");
            seen[j] = true;
        }
    }
    return AlgebraPtr(new AlgebraSpec(std::move(ring), std::move(relations), std::move(order)));
}

size_t AlgebraSpec::box_index(const Exp& e) const {
    size_t idx = 0;
    for (uint32_t j = 0; j < r_; ++j) idx = idx * dims_[j] + e[j];
    return idx;
}

bool AlgebraSpec::in_box(const Exp& e) const {
    for (uint32_t j = 0; j < r_; ++j)
        if (e[j] >= dims_[j]) return false;
    return true;
}

AElem AlgebraSpec::zero() const { return AElem(shared_from_this()); }

AElem AlgebraSpec::one() const { return from_int(1); }

AElem AlgebraSpec::from_scalar(const RElem& c) const {
    AElem f(shared_from_this());
    f.set_coeff(size_t{0}, c);
    return f;
}

AElem AlgebraSpec::from_int(int64_t v) const { return from_scalar(ring_->from_int(v)); }

AElem AlgebraSpec::monomial(const Exp& e, const RElem& c) const {
    if (!in_box(e)) throw std::invalid_argument("monomial outside the box");
    AElem f(shared_from_this());
    f.set_coeff(box_index(e), c);
    return f;
}

AElem AlgebraSpec::monomial(const Exp& e) const { return monomial(e, ring_->one()); }

const std::vector<RElem>& AlgebraSpec::univariate_power(uint32_t j, uint32_t k) const {
    return upow_[j][k];
}

AElem AlgebraSpec::reduce_monomial(const Exp& e) const {
    // tensor product of per-variable reductions of X_j^{e_j}
    AElem out(shared_from_this());
    std::vector<std::pair<Exp, RElem>> terms{{Exp(r_, 0), ring_->one()}};
    for (uint32_t j = 0; j < r_; ++j) {
        std::vector<std::pair<Exp, RElem>> next;
        if (e[j] < dims_[j]) {
            for (auto& [ex, c] : terms) {
                Exp e2 = ex;
                e2[j] = e[j];
                next.emplace_back(std::move(e2), c);
            }
        } else {
            std::vector<RElem> red;
            if (e[j] <= 2 * (dims_[j] - 1) && dims_[j] > 1) {
                red = upow_[j][e[j]];
            } else {
                auto [q, rem] = RPoly::monomial(ring_, e[j], ring_->one()).divmod(relations_[j]);
                red.assign(dims_[j], ring_->zero());
                for (uint32_t k = 0; k < dims_[j]; ++k) red[k] = rem.coeff(k);
            }
            for (auto& [ex, c] : terms)
                for (uint32_t k = 0; k < dims_[j]; ++k) {
                    if (red[k].is_zero()) continue;
                    Exp e2 = ex;
                    e2[j] = k;
                    next.emplace_back(std::move(e2), c * red[k]);
                }
        }
        terms = std::move(next);
    }
    for (auto& [ex, c] : terms) out.set_coeff(box_index(ex), out.coeff(box_index(ex)) + c);
    return out;
}

bool AlgebraSpec::same_as(const AlgebraSpec& o) const {
    if (!ring_->same_as(*o.ring_) || r_ != o.r_) return false;
    for (uint32_t j = 0; j < r_; ++j)
        if (relations_[j] != o.relations_[j]) return false;
    return order_.kind == o.order_.kind && order_.precedence == o.order_.precedence;
}

std::string AlgebraSpec::describe() const {
    std::ostringstream os;
    os << ring_->describe() << "[";
    for (uint32_t j = 0; j < r_; ++j) os << (j ? "," : "") << "X" << (j + 1);
    os << "]/<";
    for (uint32_t j = 0; j < r_; ++j)
        os << (j ? ", " : "") << relations_[j].to_string("X" + std::to_string(j + 1));
    os << ">";
    return os.str();
}

// ---- AElem ------------------------------------------------------------------

AElem::AElem(AlgebraPtr spec) : spec_(std::move(spec)) {
    c_.assign(spec_->box_size(), spec_->ring()->zero());
}

AElem::AElem(AlgebraPtr spec, std::vector<RElem> coeffs)
    : spec_(std::move(spec)), c_(std::move(coeffs)) {
    if (c_.size() != spec_->box_size()) throw std::invalid_argument("bad coefficient count");
}

void AElem::check_same(const AElem& o) const {
    if (!spec_ || !o.spec_ || !spec_->same_as(*o.spec_))
        throw std::invalid_argument("operands from different algebras");
}

const RElem& AElem::coeff(const Exp& e) const { return c_[spec_->box_index(e)]; }

void AElem::set_coeff(const Exp& e, const RElem& v) { c_[spec_->box_index(e)] = v; }

bool AElem::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const RElem& x) { return x.is_zero(); });
}

std::vector<Exp> AElem::support() const {
    std::vector<Exp> s;
    for (size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) s.push_back(spec_->box_exp(i));
    return s;
}

AElem AElem::operator+(const AElem& o) const {
    check_same(o);
    std::vector<RElem> c(c_);
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.c_[i];
    return AElem(spec_, std::move(c));
}

AElem AElem::operator-(const AElem& o) const {
    check_same(o);
    std::vector<RElem> c(c_);
    for (size_t i = 0; i < c.size(); ++i) c[i] -= o.c_[i];
    return AElem(spec_, std::move(c));
}

AElem AElem::operator-() const {
    std::vector<RElem> c;
    c.reserve(c_.size());
    for (const auto& x : c_) c.push_back(-x);
    return AElem(spec_, std::move(c));
}

AElem AElem::operator*(const RElem& s) const {
    std::vector<RElem> c;
    c.reserve(c_.size());
    for (const auto& x : c_) c.push_back(x * s);
    return AElem(spec_, std::move(c));
}

AElem AElem::operator*(const AElem& o) const {
    check_same(o);
    AElem out(spec_);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j].is_zero()) continue;
            RElem c = c_[i] * o.c_[j];
            if (c.is_zero()) continue;
            Exp s = exp_add(spec_->box_exp(i), spec_->box_exp(j));
            if (spec_->in_box(s)) {
                size_t idx = spec_->box_index(s);
                out.c_[idx] += c;
            } else {
                out += spec_->reduce_monomial(s) * c;
            }
        }
    }
    return out;
}

bool AElem::operator==(const AElem& o) const {
    check_same(o);
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

AElem AElem::shift(const Exp& e) const { return spec_->reduce_monomial(e) * (*this); }

AElem AElem::shift_up(uint32_t k) const {
    std::vector<RElem> c;
    c.reserve(c_.size());
    for (const auto& x : c_) c.push_back(x.shift_up(k));
    return AElem(spec_, std::move(c));
}

AElem AElem::shift_down(uint32_t k) const {
    std::vector<RElem> c;
    c.reserve(c_.size());
    for (const auto& x : c_) c.push_back(x.shift_down(k));
    return AElem(spec_, std::move(c));
}

AElem AElem::residue() const {
    std::vector<RElem> c;
    c.reserve(c_.size());
    for (const auto& x : c_) c.push_back(x.residue());
    return AElem(spec_, std::move(c));
}

uint32_t AElem::norm() const {
    uint32_t best = spec_->ring()->t();
    for (const auto& x : c_) best = std::min(best, x.val());
    return best;
}

LeadingData AElem::leading_data() const {
    if (is_zero()) throw std::domain_error("leading data of 0");
    uint32_t nrm = norm();
    const auto& asc = spec_->sorted_asc();
    for (size_t i = asc.size(); i-- > 0;) {
        size_t idx = asc[i];
        if (!c_[idx].is_zero() && c_[idx].val() == nrm)
            return LeadingData{nrm, spec_->box_exp(idx), c_[idx]};
    }
    throw std::logic_error("unreachable");
}

std::string AElem::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    const auto& asc = spec_->sorted_asc();
    for (size_t i = asc.size(); i-- > 0;) {
        size_t idx = asc[i];
        const RElem& c = c_[idx];
        if (c.is_zero()) continue;
        if (!first) os << "+";
        first = false;
        const Exp& e = spec_->box_exp(idx);
        bool const_term = std::all_of(e.begin(), e.end(), [](uint32_t x) { return x == 0; });
        std::string cs = c.to_string();
        bool parens = cs.find('+') != std::string::npos;
        if (const_term) {
            os << (parens ? "(" + cs + ")" : cs);
            continue;
        }
        if (!c.is_one()) os << (parens ? "(" + cs + ")" : cs) << "*";
        bool firstv = true;
        for (uint32_t j = 0; j < spec_->num_vars(); ++j) {
            if (e[j] == 0) continue;
            if (!firstv) os << "*";
            firstv = false;
            os << "X" << (j + 1);
            if (e[j] > 1) os << "^" << e[j];
        }
    }
    return os.str();
}

std::vector<RElem> phi(const AElem& f) {
    const auto& spec = *f.spec();
    std::vector<RElem> out;
    out.reserve(spec.box_size());
    for (size_t i = 0; i < spec.box_size(); ++i) out.push_back(f.coeff(spec.sorted_asc()[i]));
    return out;
}

AElem phi_inverse(const AlgebraPtr& spec, std::span<const RElem> v) {
    if (v.size() != spec->box_size())
        throw std::invalid_argument("coefficient vector length mismatch");
    AElem f(spec);
    for (size_t i = 0; i < v.size(); ++i) f.set_coeff(spec->sorted_asc()[i], v[i]);
    return f;
}

// ---- L-reduction ------------------------------------------------------------

namespace {

/// Canonical multiplier r with r * lc = c (requires val(c) >= val(lc));
/// among all solutions, the one with coordinates in [0, p^(t - val(lc))).
RElem canonical_multiplier(const RElem& c, const RElem& lc) {
    uint32_t vc = c.val(), vl = lc.val();
    RElem u = c.shift_down(vc) * lc.shift_down(vl).inv();
    return u.shift_up(vc - vl).reduce_mod_pk(lc.ring()->t() - vl);
}

struct Candidate {
    size_t chi_idx;
    Exp shift;
};

/// Find the reduction at the order-largest reducible monomial, if any.
std::optional<std::pair<size_t, Candidate>> find_step(
    const AElem& f, std::span<const AElem> chi, const std::vector<LeadingData>& lead) {
    const auto& spec = *f.spec();
    const auto& asc = spec.sorted_asc();
    for (size_t i = asc.size(); i-- > 0;) {
        size_t idx = asc[i];
        const RElem& c = f.coeff(idx);
        if (c.is_zero()) continue;
        const Exp& w = spec.box_exp(idx);
        for (size_t g = 0; g < chi.size(); ++g) {
            if (!divides(lead[g].ldg, w)) continue;
            if (c.val() < lead[g].norm) continue;
            return std::make_pair(idx, Candidate{g, exp_sub(w, lead[g].ldg)});
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<AElem> l_reduce_step(const AElem& f, std::span<const AElem> chi) {
    std::vector<LeadingData> lead;
    lead.reserve(chi.size());
    for (const auto& g : chi) {
        if (g.is_zero()) throw std::invalid_argument("zero element in reduction set");
        lead.push_back(g.leading_data());
    }
    auto step = find_step(f, chi, lead);
    if (!step) return std::nullopt;
    auto [idx, cand] = *step;
    const AElem& g = chi[cand.chi_idx];
    RElem r = canonical_multiplier(f.coeff(idx), lead[cand.chi_idx].lc);
    return f - g.shift(cand.shift) * r;
}

ReduceResult l_reduce_full(const AElem& f, std::span<const AElem> chi,
                           const ReduceOptions& opts) {
    std::vector<LeadingData> lead;
    lead.reserve(chi.size());
    for (const auto& g : chi) {
        if (g.is_zero()) throw std::invalid_argument("zero element in reduction set");
        lead.push_back(g.leading_data());
    }
    size_t cap = opts.max_steps;
    if (cap == 0)
        cap = 64 + 8 * static_cast<size_t>(f.spec()->box_size()) * f.spec()->ring()->t();
    ReduceResult res{f, 0};
    while (true) {
        auto step = find_step(res.value, chi, lead);
        if (!step) return res;
        if (++res.steps > cap)
            throw std::runtime_error("L-reduction exceeded its step bound");
        auto [idx, cand] = *step;
        const AElem& g = chi[cand.chi_idx];
        RElem r = canonical_multiplier(res.value.coeff(idx), lead[cand.chi_idx].lc);
        res.value = res.value - g.shift(cand.shift) * r;
    }
}

bool is_normal(const AElem& f, std::span<const AElem> chi) {
    std::vector<LeadingData> lead;
    for (const auto& g : chi) lead.push_back(g.leading_data());
    return !find_step(f, chi, lead).has_value();
}

// ---- Ferrers ----------------------------------------------------------------

bool is_downward_closed(const std::vector<Exp>& cells) {
    auto has = [&](const Exp& e) {
        return std::find(cells.begin(), cells.end(), e) != cells.end();
    };
    for (const auto& s : cells)
        for (size_t j = 0; j < s.size(); ++j) {
            if (s[j] == 0) continue;
            Exp u = s;
            --u[j];
            if (!has(u)) return false;
        }
    return true;
}

FerrersDiagram FerrersDiagram::from_cells(std::vector<Exp> cells) {
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    if (!is_downward_closed(cells))
        throw std::invalid_argument("cell set is not downward closed");
    return FerrersDiagram{std::move(cells)};
}

bool FerrersDiagram::contains(const Exp& e) const {
    return std::binary_search(cells.begin(), cells.end(), e);
}

std::vector<Exp> kf_minimals(const FerrersDiagram& f, uint32_t r,
                             const std::vector<uint32_t>* ambient_dims) {
    std::vector<uint32_t> bound(r, 0);
    if (ambient_dims) {
        bound = *ambient_dims;
    } else {
        for (const auto& e : f.cells)
            for (uint32_t j = 0; j < r; ++j) bound[j] = std::max(bound[j], e[j] + 1);
    }
    std::vector<Exp> out;
    Exp e(r, 0);
    for (;;) {
        if (!f.contains(e)) {
            bool minimal = true;
            for (uint32_t j = 0; j < r && minimal; ++j) {
                if (e[j] == 0) continue;
                Exp u = e;
                --u[j];
                if (!f.contains(u)) minimal = false;
            }
            if (minimal) out.push_back(e);
        }
        int64_t j = static_cast<int64_t>(r) - 1;
        while (j >= 0 && e[j] == bound[j]) e[j--] = 0;
        if (j < 0) break;
        ++e[j];
    }
    return out;
}

}  // namespace afc

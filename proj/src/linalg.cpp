#include "affinecodes/linalg.hpp"

#include <algorithm>

namespace afc {

RVec rvec_zero(const RingPtr& ring, size_t n) { return RVec(n, ring->zero()); }

bool rvec_is_zero(const RVec& v) {
    return std::all_of(v.begin(), v.end(), [](const RElem& x) { return x.is_zero(); });
}

RVec rvec_add(const RVec& a, const RVec& b) {
    RVec c(a);
    for (size_t i = 0; i < c.size(); ++i) c[i] += b[i];
    return c;
}

RVec rvec_sub(const RVec& a, const RVec& b) {
    RVec c(a);
    for (size_t i = 0; i < c.size(); ++i) c[i] -= b[i];
    return c;
}

RVec rvec_scale(const RVec& a, const RElem& s) {
    RVec c(a);
    for (auto& x : c) x *= s;
    return c;
}

RElem rvec_dot(const RVec& a, const RVec& b) {
    RElem acc = a.empty() ? RElem() : a[0].ring()->zero();
    for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

namespace {

size_t first_nonzero(const RVec& v) {
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) return i;
    return v.size();
}

}  // namespace

HowellForm howell_form(std::vector<RVec> generators, RingPtr ring, size_t cols) {
    const uint32_t t = ring->t();
    HowellForm h;
    h.ring = ring;
    h.cols = cols;

    std::vector<RVec> pending;
    for (auto& g : generators) {
        if (g.size() != cols) throw std::invalid_argument("row length mismatch");
        if (!rvec_is_zero(g)) pending.push_back(std::move(g));
    }

    for (size_t pos = 0; pos < cols; ++pos) {
        // collect rows starting at pos
        std::vector<RVec> here;
        std::vector<RVec> rest;
        for (auto& row : pending) {
            if (first_nonzero(row) == pos)
                here.push_back(std::move(row));
            else if (first_nonzero(row) > pos)
                rest.push_back(std::move(row));
        }
        pending = std::move(rest);
        if (here.empty()) continue;
        // pivot: minimal valuation at pos (first such row)
        size_t best = 0;
        for (size_t i = 1; i < here.size(); ++i)
            if (here[i][pos].val() < here[best][pos].val()) best = i;
        RVec piv = std::move(here[best]);
        here.erase(here.begin() + best);
        uint32_t e = piv[pos].val();
        piv = rvec_scale(piv, piv[pos].unit_part().inv());  // pivot entry becomes p^e
        for (auto& row : here) {
            RElem f = row[pos].shift_down(e);  // row[pos] = f * p^e
            row = rvec_sub(row, rvec_scale(piv, f));
            if (!rvec_is_zero(row)) pending.push_back(std::move(row));
        }
        if (e > 0) {
            // span closure under multiplication by p: the tail of p^(t-e)*piv
            RVec tail = rvec_scale(piv, ring->from_int(1).shift_up(t - e));
            if (!rvec_is_zero(tail)) pending.push_back(std::move(tail));
        }
        h.rows.push_back(std::move(piv));
        h.piv_pos.push_back(pos);
        h.piv_val.push_back(e);
    }

    // canonical reduction above each pivot, left to right
    for (size_t j = 0; j < h.rows.size(); ++j) {
        size_t pos = h.piv_pos[j];
        uint32_t e = h.piv_val[j];
        for (size_t i = 0; i < j; ++i) {
            const RElem& c = h.rows[i][pos];
            if (c.is_zero()) continue;
            RElem q = c.shift_down(e);  // c - q * p^e has coordinates < p^e
            if (q.is_zero()) continue;
            h.rows[i] = rvec_sub(h.rows[i], rvec_scale(h.rows[j], q));
        }
    }
    return h;
}

uint64_t HowellForm::log_q_size() const {
    uint64_t s = 0;
    for (uint32_t e : piv_val) s += ring->t() - e;
    return s;
}

uint32_t HowellForm::pivot_val_at(size_t pos) const {
    for (size_t i = 0; i < piv_pos.size(); ++i)
        if (piv_pos[i] == pos) return piv_val[i];
    return ring->t();
}

bool HowellForm::contains(RVec v) const {
    for (size_t i = 0; i < rows.size(); ++i) {
        const RElem& c = v[piv_pos[i]];
        if (c.is_zero()) continue;
        if (c.val() < piv_val[i]) return false;
        v = rvec_sub(v, rvec_scale(rows[i], c.shift_down(piv_val[i])));
    }
    return rvec_is_zero(v);
}

RVec HowellForm::coset_reduce(RVec v) const {
    for (size_t i = 0; i < rows.size(); ++i) {
        const RElem& c = v[piv_pos[i]];
        if (c.is_zero()) continue;
        RElem q = c.shift_down(piv_val[i]);
        if (q.is_zero()) continue;
        v = rvec_sub(v, rvec_scale(rows[i], q));
    }
    return v;
}

std::optional<RVec> HowellForm::express(RVec v) const {
    RVec lambda(rows.size(), ring->zero());
    for (size_t i = 0; i < rows.size(); ++i) {
        // positions before piv_pos[i] must already be cleared
        const RElem& c = v[piv_pos[i]];
        if (c.is_zero()) continue;
        if (c.val() < piv_val[i]) return std::nullopt;
        lambda[i] = c.shift_down(piv_val[i]);
        v = rvec_sub(v, rvec_scale(rows[i], lambda[i]));
    }
    if (!rvec_is_zero(v)) return std::nullopt;
    return lambda;
}

bool HowellForm::operator==(const HowellForm& o) const {
    if (cols != o.cols || rows.size() != o.rows.size()) return false;
    if (piv_pos != o.piv_pos || piv_val != o.piv_val) return false;
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols; ++j)
            if (rows[i][j] != o.rows[i][j]) return false;
    return true;
}

namespace {

/// Diagonalization U A X = D with column operations tracked in X.
/// Returns the diagonal valuations (t entries mean zero) and X as a list of
/// column vectors.  Rows of A are modified in place.
struct Diag {
    std::vector<uint32_t> diag_val;     // one entry per diagonal position (rank many)
    std::vector<RVec> x_cols;           // unknowns x = X y, column i of X
    size_t rank = 0;
};

Diag diagonalize(std::vector<RVec> a, const RingPtr& ring, size_t unknowns) {
    const uint32_t t = ring->t();
    Diag dg;
    dg.x_cols.resize(unknowns);
    for (size_t j = 0; j < unknowns; ++j) {
        dg.x_cols[j] = rvec_zero(ring, unknowns);
        dg.x_cols[j][j] = ring->one();
    }
    size_t rowsn = a.size();
    size_t k = 0;
    while (k < rowsn && k < unknowns) {
        // locate minimal-valuation entry in the remaining block (row-major)
        uint32_t best = t + 1;
        size_t bi = 0, bj = 0;
        for (size_t i = k; i < rowsn && best > 0; ++i)
            for (size_t j = k; j < unknowns; ++j) {
                uint32_t v = a[i][j].val();
                if (v < best) {
                    best = v;
                    bi = i;
                    bj = j;
                    if (best == 0) break;
                }
            }
        if (best >= t) break;  // remaining block is zero
        std::swap(a[k], a[bi]);
        for (auto& row : a) std::swap(row[k], row[bj]);
        std::swap(dg.x_cols[k], dg.x_cols[bj]);
        // scale column k so the pivot becomes p^e
        RElem uinv = a[k][k].unit_part().inv();
        for (auto& row : a) row[k] *= uinv;
        dg.x_cols[k] = rvec_scale(dg.x_cols[k], uinv);
        uint32_t e = best;
        // clear row k (column ops) and column k (row ops)
        for (size_t j = k + 1; j < unknowns; ++j) {
            if (a[k][j].is_zero()) continue;
            RElem f = a[k][j].shift_down(e);
            for (size_t i = k; i < rowsn; ++i) a[i][j] -= a[i][k] * f;
            dg.x_cols[j] = rvec_sub(dg.x_cols[j], rvec_scale(dg.x_cols[k], f));
        }
        for (size_t i = k + 1; i < rowsn; ++i) {
            if (a[i][k].is_zero()) continue;
            RElem f = a[i][k].shift_down(e);
            a[i] = rvec_sub(a[i], rvec_scale(a[k], f));
        }
        dg.diag_val.push_back(e);
        ++k;
    }
    dg.rank = dg.diag_val.size();
    return dg;
}

}  // namespace

std::vector<RVec> kernel_mod_R(const std::vector<RVec>& equations, const RingPtr& ring,
                               size_t unknowns) {
    const uint32_t t = ring->t();
    Diag dg = diagonalize(equations, ring, unknowns);
    std::vector<RVec> gens;
    for (size_t i = 0; i < dg.rank; ++i) {
        if (dg.diag_val[i] == 0) continue;  // unit pivot: only the zero solution
        gens.push_back(rvec_scale(dg.x_cols[i], ring->from_int(1).shift_up(t - dg.diag_val[i])));
    }
    for (size_t j = dg.rank; j < unknowns; ++j) gens.push_back(dg.x_cols[j]);
    return gens;
}

LinearSolution solve_mod_R(const std::vector<RVec>& equations, const RVec& rhs,
                           const RingPtr& ring, size_t unknowns) {
    // diagonalize A with tracked column ops while applying the row ops to a
    // copy of rhs
    const uint32_t t = ring->t();
    std::vector<RVec> a = equations;
    RVec b = rhs;
    std::vector<RVec> x_cols(unknowns);
    for (size_t j = 0; j < unknowns; ++j) {
        x_cols[j] = rvec_zero(ring, unknowns);
        x_cols[j][j] = ring->one();
    }
    size_t rowsn = a.size();
    std::vector<uint32_t> diag_val;
    size_t k = 0;
    while (k < rowsn && k < unknowns) {
        uint32_t best = t + 1;
        size_t bi = 0, bj = 0;
        for (size_t i = k; i < rowsn && best > 0; ++i)
            for (size_t j = k; j < unknowns; ++j) {
                uint32_t v = a[i][j].val();
                if (v < best) {
                    best = v;
                    bi = i;
                    bj = j;
                    if (best == 0) break;
                }
            }
        if (best >= t) break;
        std::swap(a[k], a[bi]);
        std::swap(b[k], b[bi]);
        for (auto& row : a) std::swap(row[k], row[bj]);
        std::swap(x_cols[k], x_cols[bj]);
        RElem uinv = a[k][k].unit_part().inv();
        for (auto& row : a) row[k] *= uinv;
        x_cols[k] = rvec_scale(x_cols[k], uinv);
        uint32_t e = best;
        for (size_t j = k + 1; j < unknowns; ++j) {
            if (a[k][j].is_zero()) continue;
            RElem f = a[k][j].shift_down(e);
            for (size_t i = k; i < rowsn; ++i) a[i][j] -= a[i][k] * f;
            x_cols[j] = rvec_sub(x_cols[j], rvec_scale(x_cols[k], f));
        }
        for (size_t i = k + 1; i < rowsn; ++i) {
            if (a[i][k].is_zero()) continue;
            RElem f = a[i][k].shift_down(e);
            b[i] -= b[k] * f;
            a[i] = rvec_sub(a[i], rvec_scale(a[k], f));
        }
        diag_val.push_back(e);
        ++k;
    }
    size_t rank = diag_val.size();

    LinearSolution sol;
    // kernel generators
    std::vector<RVec> kgens;
    for (size_t i = 0; i < rank; ++i) {
        if (diag_val[i] == 0) continue;
        kgens.push_back(rvec_scale(x_cols[i], ring->from_int(1).shift_up(t - diag_val[i])));
    }
    for (size_t j = rank; j < unknowns; ++j) kgens.push_back(x_cols[j]);
    sol.kernel = howell_form(std::move(kgens), ring, unknowns);

    // particular solution: D z = b requires b_i divisible by p^{e_i} and the
    // remaining rows of b to vanish
    RVec z = rvec_zero(ring, unknowns);
    bool ok = true;
    for (size_t i = 0; i < rank && ok; ++i) {
        if (b[i].val() < diag_val[i]) ok = false;
        else z[i] = b[i].shift_down(diag_val[i]);
    }
    for (size_t i = rank; i < rowsn && ok; ++i)
        if (!b[i].is_zero()) ok = false;
    if (ok) {
        RVec x = rvec_zero(ring, unknowns);
        for (size_t j = 0; j < unknowns; ++j) {
            if (z[j].is_zero()) continue;
            x = rvec_add(x, rvec_scale(x_cols[j], z[j]));
        }
        sol.particular = std::move(x);
    }
    return sol;
}

HowellForm colon_form(const HowellForm& m, uint32_t j) {
    const RingPtr& ring = m.ring;
    size_t n = m.cols, k = m.rows.size();
    // unknowns (v, lambda): p^j v - sum(lambda_i row_i) = 0
    std::vector<RVec> eqs(n, rvec_zero(ring, n + k));
    RElem pj = ring->from_int(1).shift_up(j);
    for (size_t c = 0; c < n; ++c) {
        eqs[c][c] = pj;
        for (size_t i = 0; i < k; ++i) eqs[c][n + i] = -m.rows[i][c];
    }
    std::vector<RVec> ker = kernel_mod_R(eqs, ring, n + k);
    std::vector<RVec> vs;
    for (auto& g : ker) vs.push_back(RVec(g.begin(), g.begin() + n));
    return howell_form(std::move(vs), ring, n);
}

FqEchelon fq_rref(std::vector<RVec> rows, const RingPtr& ring, size_t cols) {
    FqEchelon e;
    for (auto& r : rows)
        for (auto& x : r) x = x.residue();
    size_t head = 0;
    for (size_t pos = 0; pos < cols && head < rows.size(); ++pos) {
        size_t sel = rows.size();
        for (size_t i = head; i < rows.size(); ++i)
            if (!rows[i][pos].is_zero()) {
                sel = i;
                break;
            }
        if (sel == rows.size()) continue;
        std::swap(rows[head], rows[sel]);
        RElem inv = rows[head][pos].pow(ring->q() - 2).residue();
        for (auto& x : rows[head]) x = (x * inv).residue();
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == head || rows[i][pos].is_zero()) continue;
            RElem f = rows[i][pos];
            for (size_t c = 0; c < cols; ++c) rows[i][c] = (rows[i][c] - f * rows[head][c]).residue();
        }
        e.piv_pos.push_back(pos);
        ++head;
    }
    rows.resize(head);
    e.rows = std::move(rows);
    return e;
}

}  // namespace afc

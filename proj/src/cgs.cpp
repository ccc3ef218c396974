#include "affinecodes/cgs.hpp"

#include <algorithm>
#include <sstream>

namespace afc {

namespace {

struct IdealLayout {
    AlgebraPtr spec;

    size_t n() const { return spec->box_size(); }
    // coordinate position (descending order rank) of a box exponent
    size_t pos_of(size_t box_idx) const { return n() - 1 - spec->asc_rank(box_idx); }
    const Exp& exp_of(size_t pos) const { return spec->box_exp(spec->sorted_asc()[n() - 1 - pos]); }
};

/// Canonical lift of one characteristic-set generator: the tail G with
/// support in F such that p^b * (boxrep(X^s) - sum G_u X^u) lies in the
/// ideal, reduced to the canonical representative modulo the homogeneous
/// solutions.
CgsGen solve_lift(const Exp& s, const std::vector<Exp>& ferrers_cells, uint32_t b,
                  const HowellForm& ideal, const AlgebraPtr& spec) {
    const RingPtr& ring = spec->ring();
    IdealLayout lay{spec};
    size_t n = lay.n();
    size_t nf = ferrers_cells.size();
    size_t k = ideal.rows.size();
    CoordLayout clay{spec, 1};

    AElem box_rep = spec->reduce_monomial(s);
    RVec rhs = clay.elem_coords(box_rep.shift_up(b));

    // unknowns: tail coefficients (nf) then row multipliers (k)
    std::vector<RVec> eqs(n, rvec_zero(ring, nf + k));
    RElem pb = ring->from_int(1).shift_up(b);
    for (size_t u = 0; u < nf; ++u) {
        size_t pos = lay.pos_of(spec->box_index(ferrers_cells[u]));
        eqs[pos][u] = pb;
    }
    for (size_t i = 0; i < k; ++i)
        for (size_t c = 0; c < n; ++c) eqs[c][nf + i] = ideal.rows[i][c];

    LinearSolution sol = solve_mod_R(eqs, rhs, ring, nf + k);
    if (!sol.particular)
        throw std::logic_error("characteristic-set lift is unsolvable");

    // canonicalize the tail modulo the homogeneous tail solutions
    std::vector<RVec> hom;
    for (const auto& row : sol.kernel.rows) hom.push_back(RVec(row.begin(), row.begin() + nf));
    HowellForm homf = howell_form(std::move(hom), ring, nf);
    RVec tail_coeffs =
        homf.coset_reduce(RVec(sol.particular->begin(), sol.particular->begin() + nf));

    AElem tail(spec);
    for (size_t u = 0; u < nf; ++u) tail.set_coeff(ferrers_cells[u], tail_coeffs[u]);
    CgsGen gen;
    gen.label = s;
    gen.tail = tail;
    gen.value = box_rep - tail;
    return gen;
}

IdealCGS ideal_cgs_from_howell(const HowellForm& ideal, const AlgebraPtr& spec) {
    const RingPtr& ring = spec->ring();
    const uint32_t t = ring->t();
    IdealLayout lay{spec};
    size_t n = lay.n();

    // colon tower (I : p^j) mod p for j = 0..t-1, kept as pivot sets
    std::vector<std::vector<size_t>> tower_pivots(t);
    for (uint32_t j = 0; j < t; ++j) {
        HowellForm colon = j == 0 ? ideal : colon_form(ideal, j);
        std::vector<RVec> resid;
        for (const auto& row : colon.rows) {
            RVec r(row);
            for (auto& x : r) x = x.residue();
            if (!rvec_is_zero(r)) resid.push_back(std::move(r));
        }
        FqEchelon ech = fq_rref(std::move(resid), ring, n);
        tower_pivots[j] = ech.piv_pos;
    }

    // levels: j = 0 plus every strict jump of the tower
    std::vector<uint32_t> bs{0};
    for (uint32_t j = 1; j < t; ++j)
        if (tower_pivots[j].size() != tower_pivots[j - 1].size()) bs.push_back(j);

    IdealCGS cgs;
    for (uint32_t b : bs) {
        CgsLevel level;
        level.b = b;
        std::vector<bool> pivoted(n, false);
        for (size_t pos : tower_pivots[b]) pivoted[pos] = true;
        std::vector<Exp> cells;
        for (size_t pos = 0; pos < n; ++pos)
            if (!pivoted[pos]) cells.push_back(lay.exp_of(pos));
        level.ferrers = FerrersDiagram::from_cells(std::move(cells));
        std::vector<Exp> kf = kf_minimals(level.ferrers, spec->num_vars(), &spec->dims());
        std::sort(kf.begin(), kf.end(), [&](const Exp& a, const Exp& bx) {
            return spec->order().compare(a, bx) > 0;  // descending, pinned display order
        });
        for (const Exp& s : kf)
            level.chi.push_back(solve_lift(s, level.ferrers.cells, b, ideal, spec));
        cgs.levels.push_back(std::move(level));
    }

    // size: q^{sum (t - b_m) (|F_{m-1}| - |F_m|)} with |F_{-1}| = n
    uint64_t log_q = 0;
    size_t prev = n;
    for (const auto& level : cgs.levels) {
        log_q += (t - level.b) * (prev - level.ferrers.size());
        prev = level.ferrers.size();
    }
    cgs.log_q_size = log_q;
    return cgs;
}

/// The nonzero scaled generators p^{b_m} g of a layered system together
/// with their leading data and the index of the block row each one owns.
struct LayeredChi {
    std::vector<AElem> elems;
    std::vector<LeadingData> lead;
    std::vector<size_t> row;
};

LayeredChi layered_chi(const IdealCGS& cgs) {
    LayeredChi out;
    size_t r = 0;
    for (const auto& level : cgs.levels)
        for (const auto& g : level.chi) {
            AElem v = g.value.shift_up(level.b);
            if (!v.is_zero()) {
                out.lead.push_back(v.leading_data());
                out.elems.push_back(std::move(v));
                out.row.push_back(r);
            }
            ++r;
        }
    return out;
}

/// One-shot layered L-reduction of w[blk.component] by the block's scaled
/// system, mirrored on the whole word through the block rows (the word
/// moves inside the code).  Deterministic: order-largest coefficient first,
/// first matching generator, canonical multiplier.
void reduce_component_with_rows(Word& w, const ModuleBlock& blk, const AlgebraPtr& spec) {
    LayeredChi chi = layered_chi(blk.cgs);
    if (chi.elems.empty()) return;
    const RingPtr& ring = spec->ring();
    const uint32_t t = ring->t();
    size_t cap = 64 + 8 * spec->box_size() * t;
    size_t steps = 0;
    for (;;) {
        const AElem& f = w[blk.component];
        bool reduced = false;
        const auto& asc = spec->sorted_asc();
        for (size_t ai = asc.size(); ai-- > 0 && !reduced;) {
            size_t idx = asc[ai];
            const RElem& c = f.coeff(idx);
            if (c.is_zero()) continue;
            const Exp& wexp = spec->box_exp(idx);
            for (size_t e = 0; e < chi.elems.size(); ++e) {
                if (!divides(chi.lead[e].ldg, wexp)) continue;
                if (c.val() < chi.lead[e].norm) continue;
                RElem u = c.shift_down(c.val()) * chi.lead[e].lc.shift_down(chi.lead[e].norm).inv();
                RElem r = u.shift_up(c.val() - chi.lead[e].norm).reduce_mod_pk(t - chi.lead[e].norm);
                AElem factor = spec->monomial(exp_sub(wexp, chi.lead[e].ldg), r);
                w = word_sub(w, word_scale(blk.rows[chi.row[e]], factor));
                reduced = true;
                break;
            }
        }
        if (!reduced) return;
        if (++steps > cap)
            throw std::runtime_error("mirrored L-reduction exceeded its step bound");
    }
}

}  // namespace

std::vector<AElem> IdealCGS::scaled_elements() const {
    std::vector<AElem> out;
    for (const auto& level : levels)
        for (const auto& g : level.chi) out.push_back(g.value.shift_up(level.b));
    return out;
}

IdealCGS ideal_cgs(const std::vector<AElem>& generators, const AlgebraPtr& spec) {
    CoordLayout lay{spec, 1};
    std::vector<RVec> rows;
    for (const auto& g : generators)
        for (size_t idx = 0; idx < spec->box_size(); ++idx)
            rows.push_back(lay.elem_coords(g.shift(spec->box_exp(idx))));
    HowellForm h = howell_form(std::move(rows), spec->ring(), spec->box_size());
    return ideal_cgs_from_howell(h, spec);
}

ModuleCGS compute_module_cgs(const CodeModule& code) {
    const AlgebraPtr& spec = code.spec();
    const RingPtr& ring = spec->ring();
    const HowellForm& h = code.howell();
    CoordLayout lay = code.layout();
    size_t n = spec->box_size(), l = code.index();

    ModuleCGS out;
    if (h.rows.empty()) return out;

    std::vector<std::vector<size_t>> rows_of_comp(l);
    for (size_t i = 0; i < h.rows.size(); ++i)
        rows_of_comp[lay.comp_of(h.piv_pos[i])].push_back(i);

    for (size_t c = 0; c < l; ++c) {
        if (rows_of_comp[c].empty()) continue;
        ModuleBlock blk;
        blk.component = c;
        std::vector<RVec> proj;
        for (size_t i : rows_of_comp[c])
            proj.push_back(RVec(h.rows[i].begin() + c * n, h.rows[i].begin() + (c + 1) * n));
        HowellForm ideal = howell_form(std::move(proj), ring, n);
        blk.cgs = ideal_cgs_from_howell(ideal, spec);
        out.blocks.push_back(std::move(blk));
        out.log_q_size += out.blocks.back().cgs.log_q_size;
    }

    // rows, last block first so tail reduction always uses finished rows of
    // the later blocks
    for (size_t bi = out.blocks.size(); bi-- > 0;) {
        ModuleBlock& blk = out.blocks[bi];
        size_t comp = blk.component;
        for (const auto& level : blk.cgs.levels) {
            for (const auto& gen : level.chi) {
                AElem target = gen.value.shift_up(level.b);
                Word w = word_zero(spec, l);
                if (!target.is_zero()) {
                    // express the target through the rows pivoted in this block
                    RVec v = lay.elem_coords(target);
                    RVec acc = rvec_zero(ring, lay.cols());
                    for (size_t i : rows_of_comp[comp]) {
                        size_t local = h.piv_pos[i] - comp * n;
                        const RElem& cf = v[local];
                        if (cf.is_zero()) continue;
                        if (cf.val() < h.piv_val[i])
                            throw std::logic_error("CGS element escaped its projection");
                        RElem f = cf.shift_down(h.piv_val[i]);
                        for (size_t pos = 0; pos < n; ++pos)
                            v[pos] -= h.rows[i][comp * n + pos] * f;
                        acc = rvec_add(acc, rvec_scale(h.rows[i], f));
                    }
                    if (!rvec_is_zero(v))
                        throw std::logic_error("CGS element escaped its projection");
                    w = lay.from_coords(acc);
                    for (size_t bj = bi + 1; bj < out.blocks.size(); ++bj)
                        reduce_component_with_rows(w, out.blocks[bj], spec);
                }
                blk.rows.push_back(std::move(w));
            }
        }
    }
    return out;
}

std::vector<Word> canonical_generator_matrix(const CodeModule& code) {
    const ModuleCGS& cgs = code.cgs();
    std::vector<Word> rows;
    for (const auto& blk : cgs.blocks) {
        size_t r = 0;
        for (const auto& level : blk.cgs.levels)
            for (const auto& gen : level.chi) {
                if (!gen.value.shift_up(level.b).is_zero()) rows.push_back(blk.rows[r]);
                ++r;
            }
    }
    // the printed rows must regenerate the module
    CodeModule regen(code.spec(), code.index(), rows);
    if (!(regen.howell() == code.howell()))
        throw std::logic_error("canonical generator matrix fails to regenerate the code");
    return rows;
}

std::string Cardinality::decimal() const {
    // exact base^exponent as a decimal string
    std::vector<uint32_t> digits{1};
    for (uint64_t i = 0; i < exponent; ++i) {
        uint64_t carry = 0;
        for (auto& dgt : digits) {
            uint64_t v = dgt * base + carry;
            dgt = static_cast<uint32_t>(v % 10);
            carry = v / 10;
        }
        while (carry) {
            digits.push_back(static_cast<uint32_t>(carry % 10));
            carry /= 10;
        }
    }
    std::string s;
    for (size_t i = digits.size(); i-- > 0;) s += static_cast<char>('0' + digits[i]);
    return s;
}

Cardinality cardinality(const CodeModule& code) {
    return Cardinality{code.spec()->ring()->q(), code.howell().log_q_size()};
}

Cardinality cardinality_from_cgs(const CodeModule& code) {
    return Cardinality{code.spec()->ring()->q(), code.cgs().log_q_size};
}

bool cgs_membership(const AElem& f, const IdealCGS& cgs) {
    AElem h = f;
    for (const auto& level : cgs.levels) {
        if (h.norm() < level.b) return false;
        std::vector<AElem> chi;
        for (const auto& g : level.chi)
            if (!g.value.is_zero()) chi.push_back(g.value);
        if (!chi.empty()) h = l_reduce_full(h, chi).value;
    }
    return h.is_zero();
}

bool membership(const Word& w, const CodeModule& code, MembershipMethod method) {
    if (w.size() != code.index()) throw std::invalid_argument("word arity mismatch");
    for (const auto& f : w)
        if (!f.spec()->same_as(*code.spec())) throw std::invalid_argument("algebra mismatch");
    if (method == MembershipMethod::linear) return code.contains_word(w);

    const ModuleCGS& cgs = code.cgs();
    Word rem = w;
    size_t next_block = 0;
    for (size_t comp = 0; comp < code.index(); ++comp) {
        while (next_block < cgs.blocks.size() && cgs.blocks[next_block].component < comp)
            ++next_block;
        if (rem[comp].is_zero()) continue;
        if (next_block >= cgs.blocks.size() || cgs.blocks[next_block].component != comp)
            return false;
        reduce_component_with_rows(rem, cgs.blocks[next_block], code.spec());
        if (!rem[comp].is_zero()) return false;
    }
    return word_is_zero(rem);
}

}  // namespace afc

#include "affinecodes/duality.hpp"

#include <algorithm>

namespace afc {

namespace {

/// Equations of the pairing sum_i e_i c_i = 0 against one word c, in the
/// descending coordinate layout: one row per box coefficient of the product.
std::vector<RVec> pairing_equations(const Word& c, const CoordLayout& lay) {
    const AlgebraPtr& spec = lay.spec;
    size_t n = spec->box_size(), l = lay.l;
    std::vector<RVec> eqs(n, rvec_zero(spec->ring(), n * l));
    for (size_t comp = 0; comp < l; ++comp) {
        for (size_t pos = 0; pos < n; ++pos) {
            // unknown at (comp, pos) is the coefficient of X^u in e_comp
            const Exp& u = spec->box_exp(spec->sorted_asc()[n - 1 - pos]);
            AElem prod = c[comp].shift(u);
            RVec pc = lay.elem_coords(prod);
            for (size_t row = 0; row < n; ++row) eqs[row][lay.pos(comp, pos)] = pc[row];
        }
    }
    return eqs;
}

std::vector<Word> kernel_words(const std::vector<RVec>& eqs, const CoordLayout& lay) {
    std::vector<RVec> ker = kernel_mod_R(eqs, lay.spec->ring(), lay.cols());
    HowellForm h = howell_form(std::move(ker), lay.spec->ring(), lay.cols());
    std::vector<Word> words;
    words.reserve(h.rows.size());
    for (const auto& row : h.rows) words.push_back(lay.from_coords(row));
    return words;
}

}  // namespace

RDualResult r_dual(const CodeModule& code) {
    CoordLayout lay = code.layout();
    // Phi(e).Phi(c) = 0 for every row of the expanded generator matrix
    std::vector<RVec> eqs;
    for (const auto& w : expand_over_R(code.generators())) eqs.push_back(lay.to_coords(w));
    std::vector<RVec> ker = kernel_mod_R(eqs, code.spec()->ring(), lay.cols());
    HowellForm h = howell_form(std::move(ker), code.spec()->ring(), lay.cols());
    RDualResult res;
    res.log_q_size = h.log_q_size();
    for (const auto& row : h.rows) res.generators.push_back(lay.from_coords(row));
    return res;
}

bool is_abelian_type(const AlgebraSpec& spec) {
    for (uint32_t j = 0; j < spec.num_vars(); ++j) {
        const RPoly& tj = spec.relations()[j];
        uint32_t nj = spec.dims()[j];
        if (tj != RPoly::x_pow_minus_one(spec.ring(), nj)) return false;
    }
    return true;
}

AElem conjugate(const AElem& f) {
    const AlgebraPtr& spec = f.spec();
    if (!is_abelian_type(*spec))
        throw std::invalid_argument("conjugation needs relations of the form X^n - 1");
    AElem out(spec);
    for (size_t idx = 0; idx < spec->box_size(); ++idx) {
        const RElem& c = f.coeff(idx);
        if (c.is_zero()) continue;
        Exp e = spec->box_exp(idx);
        for (uint32_t j = 0; j < spec->num_vars(); ++j)
            e[j] = e[j] == 0 ? 0 : spec->dims()[j] - e[j];
        out.set_coeff(e, out.coeff(e) + c);
    }
    return out;
}

CodeModule a_dual(const CodeModule& code) {
    CoordLayout lay = code.layout();
    std::vector<RVec> eqs;
    for (const auto& g : code.generators()) {
        auto rows = pairing_equations(g, lay);
        eqs.insert(eqs.end(), rows.begin(), rows.end());
    }
    std::vector<Word> gens = kernel_words(eqs, lay);
    CodeModule dual(code.spec(), code.index(), std::move(gens));
    // the kernel is closed under the algebra action; assert it
    for (const auto& g : dual.generators())
        for (uint32_t j = 0; j < code.spec()->num_vars(); ++j) {
            Exp e(code.spec()->num_vars(), 0);
            e[j] = 1;
            Word shifted = g;
            for (auto& f : shifted) f = f.shift(e);
            if (!dual.contains_word(shifted))
                throw std::logic_error("A-dual is not closed under the algebra action");
        }
    return dual;
}

CodeModule hermitian_dual(const CodeModule& code) {
    if (!is_abelian_type(*code.spec()))
        throw std::invalid_argument("Hermitian duality needs relations of the form X^n - 1");
    std::vector<Word> conj_gens;
    for (const auto& g : code.generators()) {
        Word cg;
        cg.reserve(g.size());
        for (const auto& f : g) cg.push_back(conjugate(f));
        conj_gens.push_back(std::move(cg));
    }
    return a_dual(CodeModule(code.spec(), code.index(), std::move(conj_gens)));
}

CodeModule annihilator(const std::vector<AElem>& gens, const AlgebraPtr& spec) {
    std::vector<Word> words;
    for (const auto& g : gens) words.push_back(Word{g});
    return a_dual(CodeModule(spec, 1, std::move(words)));
}

Word lift_dual_word(const Word& cprime, const CodeModule& code) {
    const AlgebraPtr& spec = code.spec();
    const RingPtr& ring = spec->ring();
    size_t n = spec->box_size(), l = code.index();
    if (cprime.size() + 1 != l) throw std::invalid_argument("punctured word arity mismatch");
    CoordLayout one{spec, 1};

    std::vector<Word> rows = canonical_generator_matrix(code);
    std::vector<RVec> eqs;
    RVec rhs;
    for (const auto& row : rows) {
        // unknown h: h * row[0] = -(sum_{w >= 1} cprime[w-1] * row[w])
        AElem target = spec->zero();
        for (size_t w = 1; w < l; ++w) target += cprime[w - 1] * row[w];
        target = -target;
        RVec tc = one.elem_coords(target);
        std::vector<RVec> block(n, rvec_zero(ring, n));
        for (size_t pos = 0; pos < n; ++pos) {
            const Exp& u = spec->box_exp(spec->sorted_asc()[n - 1 - pos]);
            RVec pc = one.elem_coords(row[0].shift(u));
            for (size_t r = 0; r < n; ++r) block[r][pos] = pc[r];
        }
        for (size_t r = 0; r < n; ++r) {
            eqs.push_back(std::move(block[r]));
            rhs.push_back(tc[r]);
        }
    }
    LinearSolution sol = solve_mod_R(eqs, rhs, ring, n);
    if (!sol.particular)
        throw std::runtime_error("dual-word lift is unsolvable (non-Frobenius algebra?)");
    RVec h = sol.kernel.coset_reduce(*sol.particular);
    Word out;
    out.reserve(l);
    out.push_back(one.elem_from_coords(h));
    for (const auto& f : cprime) out.push_back(f);
    return out;
}

std::vector<Word> minimize_rows(std::vector<Word> rows, const AlgebraPtr& spec, size_t l) {
    for (size_t i = rows.size(); i-- > 0;) {
        std::vector<Word> others;
        for (size_t j = 0; j < rows.size(); ++j)
            if (j != i) others.push_back(rows[j]);
        CodeModule span(spec, l, std::move(others));
        if (span.contains_word(rows[i])) rows.erase(rows.begin() + i);
    }
    return rows;
}

ParityCheckResult parity_check_matrix(const CodeModule& code) {
    const AlgebraPtr& spec = code.spec();
    if (spec->num_vars() != 1)
        throw std::invalid_argument("parity-check construction needs a univariate algebra");
    const RingPtr& ring = spec->ring();
    size_t n = spec->box_size(), l = code.index();

    ParityCheckResult res;

    if (l == 1) {
        std::vector<AElem> proj;
        for (const auto& g : code.generators()) proj.push_back(g[0]);
        CodeModule ann = annihilator(proj, spec);
        res.h_rows = minimize_rows(canonical_generator_matrix(ann), spec, 1);
        res.annihilator_rows = res.h_rows.size();
    } else {
        // punctured subcode C' of C_2 (codewords with first component zero)
        const HowellForm& h = code.howell();
        CoordLayout lay = code.layout();
        std::vector<Word> sub_rows;
        for (size_t i = 0; i < h.rows.size(); ++i) {
            if (h.piv_pos[i] < n) continue;
            Word w = lay.from_coords(h.rows[i]);
            sub_rows.push_back(Word(w.begin() + 1, w.end()));
        }
        CodeModule punctured(spec, l - 1, std::move(sub_rows));
        ParityCheckResult inner = parity_check_matrix(punctured);
        if (!inner.lifts_solved) res.lifts_solved = false;

        // annihilator of the first projection, from its CGS generators
        std::vector<AElem> proj;
        for (const auto& g : code.generators()) proj.push_back(g[0]);
        CodeModule proj_ideal(spec, 1, [&] {
            std::vector<Word> ws;
            for (const auto& f : proj) ws.push_back(Word{f});
            return ws;
        }());
        std::vector<AElem> chi1;
        if (!proj_ideal.cgs().blocks.empty())
            for (const auto& v : proj_ideal.cgs().blocks[0].cgs.scaled_elements())
                if (!v.is_zero()) chi1.push_back(v);
        if (chi1.empty()) chi1.push_back(spec->zero());  // Ann(0) = A
        CodeModule ann = annihilator(chi1, spec);
        for (const auto& arow : minimize_rows(canonical_generator_matrix(ann), spec, 1)) {
            Word w = word_zero(spec, l);
            w[0] = arow[0];
            res.h_rows.push_back(std::move(w));
        }
        res.annihilator_rows = res.h_rows.size();

        for (const auto& hrow : inner.reduced) {
            try {
                res.h_rows.push_back(lift_dual_word(hrow, code));
            } catch (const std::runtime_error&) {
                res.lifts_solved = false;
            }
        }
    }

    // post-hoc verification in place of the Frobenius hypothesis
    CodeModule span(spec, l, res.h_rows);
    res.dual_log_q = span.howell().log_q_size();
    res.orthogonal = true;
    for (const auto& hrow : res.h_rows)
        for (const auto& g : code.generators()) {
            AElem acc = spec->zero();
            for (size_t i = 0; i < l; ++i) acc += hrow[i] * g[i];
            if (!acc.is_zero()) res.orthogonal = false;
        }
    res.index_product =
        span.howell().log_q_size() + code.howell().log_q_size() == uint64_t(n) * l * ring->t();
    res.reduced = minimize_rows(canonical_generator_matrix(span), spec, l);
    return res;
}

bool is_self_dual(const CodeModule& code) { return a_dual(code).same_module(code); }

}  // namespace afc

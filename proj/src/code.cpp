#include "affinecodes/code.hpp"

#include <sstream>

#include "affinecodes/cgs.hpp"

namespace afc {

Word word_zero(const AlgebraPtr& spec, size_t l) { return Word(l, spec->zero()); }

bool word_is_zero(const Word& w) {
    return std::all_of(w.begin(), w.end(), [](const AElem& f) { return f.is_zero(); });
}

Word word_add(const Word& a, const Word& b) {
    Word c(a);
    for (size_t i = 0; i < c.size(); ++i) c[i] += b[i];
    return c;
}

Word word_sub(const Word& a, const Word& b) {
    Word c(a);
    for (size_t i = 0; i < c.size(); ++i) c[i] -= b[i];
    return c;
}

Word word_scale(const Word& a, const AElem& f) {
    Word c(a);
    for (auto& x : c) x = x * f;
    return c;
}

Word word_scale(const Word& a, const RElem& s) {
    Word c(a);
    for (auto& x : c) x = x * s;
    return c;
}

bool word_eq(const Word& a, const Word& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

std::string word_to_string(const Word& w) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < w.size(); ++i) os << (i ? ", " : "") << w[i].to_string();
    os << ")";
    return os.str();
}

std::vector<RElem> phi_word(const Word& w) {
    std::vector<RElem> out;
    for (const auto& f : w) {
        auto v = phi(f);
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

Word phi_word_inverse(const AlgebraPtr& spec, size_t l, std::span<const RElem> v) {
    if (v.size() != spec->box_size() * l)
        throw std::invalid_argument("coefficient vector length mismatch");
    Word w;
    w.reserve(l);
    for (size_t i = 0; i < l; ++i)
        w.push_back(phi_inverse(spec, v.subspan(i * spec->box_size(), spec->box_size())));
    return w;
}

RVec CoordLayout::elem_coords(const AElem& f) const {
    size_t n = spec->box_size();
    RVec v;
    v.reserve(n);
    for (size_t i = 0; i < n; ++i) v.push_back(f.coeff(spec->sorted_asc()[n - 1 - i]));
    return v;
}

AElem CoordLayout::elem_from_coords(const RVec& v) const {
    size_t n = spec->box_size();
    AElem f(spec);
    for (size_t i = 0; i < n; ++i) f.set_coeff(spec->sorted_asc()[n - 1 - i], v[i]);
    return f;
}

RVec CoordLayout::to_coords(const Word& w) const {
    RVec out;
    out.reserve(cols());
    for (const auto& f : w) {
        RVec v = elem_coords(f);
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

Word CoordLayout::from_coords(const RVec& v) const {
    size_t n = spec->box_size();
    Word w;
    w.reserve(l);
    for (size_t i = 0; i < l; ++i)
        w.push_back(elem_from_coords(RVec(v.begin() + i * n, v.begin() + (i + 1) * n)));
    return w;
}

std::vector<Word> expand_over_R(const std::vector<Word>& rows) {
    std::vector<Word> out;
    for (const auto& row : rows) {
        if (row.empty()) continue;
        const auto& spec = row[0].spec();
        for (size_t idx = 0; idx < spec->box_size(); ++idx) {
            const Exp& e = spec->box_exp(idx);
            Word r;
            r.reserve(row.size());
            for (const auto& f : row) r.push_back(f.shift(e));
            out.push_back(std::move(r));
        }
    }
    return out;
}

CodeModule::CodeModule(AlgebraPtr spec, size_t l, std::vector<Word> generators)
    : spec_(std::move(spec)), l_(l), gens_(std::move(generators)) {
    if (l_ == 0) throw std::invalid_argument("index must be >= 1");
    for (const auto& g : gens_) {
        if (g.size() != l_) throw std::invalid_argument("generator arity mismatch");
        for (const auto& f : g)
            if (!f.spec()->same_as(*spec_))
                throw std::invalid_argument("generator over the wrong algebra");
    }
}

const HowellForm& CodeModule::howell() const {
    std::call_once(howell_once_, [&] {
        CoordLayout lay = layout();
        std::vector<RVec> rows;
        for (const auto& w : expand_over_R(gens_)) rows.push_back(lay.to_coords(w));
        howell_ = std::make_shared<HowellForm>(
            howell_form(std::move(rows), spec_->ring(), lay.cols()));
    });
    return *howell_;
}

const ModuleCGS& CodeModule::cgs() const {
    std::call_once(cgs_once_, [&] {
        cgs_ = std::make_shared<ModuleCGS>(compute_module_cgs(*this));
    });
    return *cgs_;
}

bool CodeModule::contains_word(const Word& w) const {
    return howell().contains(layout().to_coords(w));
}

bool CodeModule::same_module(const CodeModule& o) const { return howell() == o.howell(); }

bool CodeModule::is_zero() const { return howell().rows.empty(); }

}  // namespace afc
